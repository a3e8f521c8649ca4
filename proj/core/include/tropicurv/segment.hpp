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

#ifndef TROPICURV_SEGMENT_HPP_
#define TROPICURV_SEGMENT_HPP_

#include <string_view>
#include <vector>

#include "tropicurv/piecewise.hpp"
#include "tropicurv/point.hpp"
#include "tropicurv/rational.hpp"

namespace tropicurv {

struct Breakpoint {
  Rational t;
  ProjectivePoint point;
};

// The min-plus tropical line segment from `start` to `end`, parametrized
// by tropical arc length t in [0, length()].
//
// Coordinates are affine in t between consecutive breakpoints, and the
// parametrization has unit speed: d_tr(gamma(s), gamma(t)) = |t - s|.
class TropicalSegment {
 public:
  // Throws DegenerateError if p == q and DimensionError on mismatch.
  TropicalSegment(const ProjectivePoint& p, const ProjectivePoint& q);

  const ProjectivePoint& start() const { return breakpoints_.front().point; }
  const ProjectivePoint& end() const { return breakpoints_.back().point; }
  const Rational& length() const { return breakpoints_.back().t; }
  std::size_t dim() const { return start().dim(); }

  // Includes both endpoints: t_0 = 0 and t_m = length().
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

  // Number of affine pieces (breakpoints().size() - 1); at most dim() - 1.
  std::size_t piece_count() const { return breakpoints_.size() - 1; }

  // gamma(t). Throws DomainError unless 0 <= t <= length().
  ProjectivePoint At(const Rational& t) const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

inline TropicalSegment TropSegment(const ProjectivePoint& p, const ProjectivePoint& q) {
  return TropicalSegment(p, q);
}

inline ProjectivePoint SegmentPoint(const TropicalSegment& seg, const Rational& t) {
  return seg.At(t);
}

// The three shapes a segment can take in R^3 / R1.
enum class SegmentType { kL1, kL2, kL3 };

std::string_view ToString(SegmentType type);

// Classifies a plane segment (dim 3). The endpoints are first ordered so
// that the first nonzero reduced-coordinate difference is positive. Ties
// (axis-parallel or diagonal segments, which have a single piece) are
// resolved by testing the L1, L2, L3 conditions in order with weak
// inequalities.
SegmentType PlaneSegmentType(const ProjectivePoint& p, const ProjectivePoint& q);

// f(t) = d_tr(v, gamma(t)) on [0, seg.length()], exact.
PiecewiseLinearFn DistanceProfile(const ProjectivePoint& v, const TropicalSegment& seg);

}  // namespace tropicurv

#endif  // TROPICURV_SEGMENT_HPP_
