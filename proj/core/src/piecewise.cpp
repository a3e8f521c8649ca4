// Copyright 2026 The tropicurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropicurv/piecewise.hpp"

#include <algorithm>

namespace tropicurv {

PiecewiseLinearFn PiecewiseLinearFn::FromKnots(std::span<const Knot> knots) {
  if (knots.size() < 2) throw DomainError("a piecewise-linear function needs two knots");
  PiecewiseLinearFn fn;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const Knot& a = knots[k];
    const Knot& b = knots[k + 1];
    if (!(a.t < b.t)) throw DomainError("knots must be strictly increasing in t");
    Rational slope = (b.value - a.value) / (b.t - a.t);
    if (!fn.pieces_.empty() && fn.pieces_.back().slope == slope) {
      fn.pieces_.back().t_hi = b.t;
    } else {
      fn.pieces_.push_back({a.t, b.t, a.value, std::move(slope)});
    }
  }
  return fn;
}

Rational PiecewiseLinearFn::operator()(const Rational& t) const {
  if (t < lo() || t > hi()) throw DomainError("t = " + ToString(t) + " outside the domain");
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t,
                             [](const AffinePiece& p, const Rational& x) { return p.t_hi < x; });
  return (*it)(t);
}

std::vector<Knot> PiecewiseLinearFn::knots() const {
  std::vector<Knot> out;
  out.reserve(pieces_.size() + 1);
  for (const auto& p : pieces_) out.push_back({p.t_lo, p.value_at_lo});
  out.push_back({pieces_.back().t_hi, pieces_.back().value_at_hi()});
  return out;
}

}  // namespace tropicurv
