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

#ifndef TROPICURV_PIECEWISE_HPP_
#define TROPICURV_PIECEWISE_HPP_

#include <span>
#include <utility>
#include <vector>

#include "tropicurv/rational.hpp"

namespace tropicurv {

// value_at_lo + slope * (t - t_lo) on [t_lo, t_hi].
struct AffinePiece {
  Rational t_lo;
  Rational t_hi;
  Rational value_at_lo;
  Rational slope;

  Rational operator()(const Rational& t) const { return value_at_lo + slope * (t - t_lo); }
  Rational value_at_hi() const { return (*this)(t_hi); }

  bool operator==(const AffinePiece&) const = default;
};

// (t, value) sample of a piecewise-linear function.
struct Knot {
  Rational t;
  Rational value;

  bool operator==(const Knot&) const = default;
};

// A continuous piecewise-linear function on a closed interval [lo, hi],
// stored as maximal affine pieces (adjacent pieces have distinct slopes).
class PiecewiseLinearFn {
 public:
  // Builds the function interpolating `knots` (strictly increasing t, at
  // least two knots). Collinear interior knots are merged away.
  static PiecewiseLinearFn FromKnots(std::span<const Knot> knots);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Rational& lo() const { return pieces_.front().t_lo; }
  const Rational& hi() const { return pieces_.back().t_hi; }

  // Throws DomainError outside [lo, hi].
  Rational operator()(const Rational& t) const;

  // Breakpoints including both domain ends.
  std::vector<Knot> knots() const;

  bool operator==(const PiecewiseLinearFn&) const = default;

 private:
  std::vector<AffinePiece> pieces_;
};

}  // namespace tropicurv

#endif  // TROPICURV_PIECEWISE_HPP_
