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

#include "tropicurv/segment.hpp"

#include <algorithm>
#include <map>

namespace tropicurv {

TropicalSegment::TropicalSegment(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dim() != q.dim()) throw DimensionError("segment endpoints have different dimensions");
  if (p == q) throw DegenerateError("segment endpoints coincide: " + ToString(p));

  const std::size_t n = p.dim();
  // Shift q's representative so that delta_i = q_i - p_i has minimum 0.
  std::vector<Rational> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = q[i] - p[i];
  const Rational shift = *std::min_element(delta.begin(), delta.end());
  std::vector<Rational> q_rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    delta[i] -= shift;
    q_rep[i] = q[i] - shift;
  }

  // Bends happen where p_i + t catches up with q_rep_i, i.e. at t = delta_i.
  std::vector<Rational> lambdas = delta;
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  breakpoints_.reserve(lambdas.size());
  std::vector<Rational> raw(n);
  for (const auto& lambda : lambdas) {
    for (std::size_t i = 0; i < n; ++i) raw[i] = std::min<Rational>(p[i] + lambda, q_rep[i]);
    breakpoints_.push_back({lambda, ProjectivePoint::Canonicalize(raw)});
  }
}

ProjectivePoint TropicalSegment::At(const Rational& t) const {
  if (t < 0 || t > length()) {
    throw DomainError("t = " + ToString(t) + " outside [0, " + ToString(length()) + "]");
  }
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](const Breakpoint& b, const Rational& x) { return b.t < x; });
  if (it->t == t) return it->point;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  const Rational frac = (t - lo.t) / (hi.t - lo.t);
  std::vector<Rational> raw(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    raw[i] = lo.point[i] + frac * (hi.point[i] - lo.point[i]);
  }
  return ProjectivePoint::Canonicalize(raw);
}

std::string_view ToString(SegmentType type) {
  switch (type) {
    case SegmentType::kL1:
      return "L1";
    case SegmentType::kL2:
      return "L2";
    case SegmentType::kL3:
      return "L3";
  }
  return "?";
}

SegmentType PlaneSegmentType(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dim() != 3 || q.dim() != 3) throw DimensionError("plane segment types need dim 3");
  if (p == q) throw DegenerateError("segment endpoints coincide");
  Rational a1 = p[1], a2 = p[2], b1 = q[1], b2 = q[2];
  if (a1 > b1 || (a1 == b1 && a2 > b2)) {
    std::swap(a1, b1);
    std::swap(a2, b2);
  }
  if (a2 <= b2 && a1 - a2 <= b1 - b2) return SegmentType::kL1;
  if (a2 <= b2 && a1 - a2 >= b1 - b2) return SegmentType::kL2;
  return SegmentType::kL3;
}

namespace {

// A line value(t) = intercept + slope * (t - t0) on one segment piece.
struct Line {
  Rational intercept;
  Rational slope;
};

// Keeps, for every slope, the line that is extreme in the requested
// direction; lines of equal slope never cross, so the others can never
// reach the envelope.
std::vector<Line> EnvelopeCandidates(const std::vector<Line>& lines, bool upper) {
  std::map<Rational, Rational> best;
  for (const auto& l : lines) {
    auto [it, inserted] = best.try_emplace(l.slope, l.intercept);
    if (!inserted) {
      if (upper ? l.intercept > it->second : l.intercept < it->second) it->second = l.intercept;
    }
  }
  std::vector<Line> out;
  out.reserve(best.size());
  for (auto& [slope, intercept] : best) out.push_back({intercept, slope});
  return out;
}

void AddCrossings(const std::vector<Line>& lines, const Rational& width,
                  std::vector<Rational>& offsets) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      // Slopes are distinct by construction.
      Rational s = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
      if (s > 0 && s < width) offsets.push_back(std::move(s));
    }
  }
}

Rational EnvelopeAt(const std::vector<Line>& lines, const Rational& s, bool upper) {
  Rational best = lines.front().intercept + lines.front().slope * s;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Rational v = lines[i].intercept + lines[i].slope * s;
    if (upper ? v > best : v < best) best = std::move(v);
  }
  return best;
}

}  // namespace

PiecewiseLinearFn DistanceProfile(const ProjectivePoint& v, const TropicalSegment& seg) {
  if (v.dim() != seg.dim()) throw DimensionError("profile vertex and segment differ in dimension");
  const std::size_t n = v.dim();
  const auto& bps = seg.breakpoints();

  std::vector<Knot> knots;
  std::vector<Line> lines(n);
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const Rational& t0 = bps[k].t;
    const Rational width = bps[k + 1].t - t0;
    // d_i(t) = v_i - gamma_i(t), affine on this piece.
    for (std::size_t i = 0; i < n; ++i) {
      lines[i].intercept = v[i] - bps[k].point[i];
      lines[i].slope = -(bps[k + 1].point[i] - bps[k].point[i]) / width;
    }
    const auto upper = EnvelopeCandidates(lines, true);
    const auto lower = EnvelopeCandidates(lines, false);

    std::vector<Rational> offsets{Rational(0)};
    AddCrossings(upper, width, offsets);
    AddCrossings(lower, width, offsets);
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    // The piece's right end is the next piece's left end; emit it only once.
    if (k + 2 == bps.size()) offsets.push_back(width);

    for (const auto& s : offsets) {
      knots.push_back({t0 + s, EnvelopeAt(upper, s, true) - EnvelopeAt(lower, s, false)});
    }
  }
  return PiecewiseLinearFn::FromKnots(knots);
}

}  // namespace tropicurv
