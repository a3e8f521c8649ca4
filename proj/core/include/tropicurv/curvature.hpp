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

#ifndef TROPICURV_CURVATURE_HPP_
#define TROPICURV_CURVATURE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropicurv/piecewise.hpp"
#include "tropicurv/point.hpp"
#include "tropicurv/rational.hpp"
#include "tropicurv/segment.hpp"

namespace tropicurv {

// c2 t^2 + c1 t + c0.
struct QuadraticPoly {
  Rational c2;
  Rational c1;
  Rational c0;

  Rational operator()(const Rational& t) const { return (c2 * t + c1) * t + c0; }
  bool is_zero() const { return c2 == 0 && c1 == 0 && c0 == 0; }

  bool operator==(const QuadraticPoly&) const = default;
};

// Squared distance from the apex of a Euclidean triangle to the point at
// distance t along the side of length B, measured from the endpoint at
// distance C from the apex. A is the remaining side:
//
//   h^2(t) = t^2 + ((A^2 - B^2 - C^2) / B) t + C^2,   t in [0, B],
//
// with h^2(0) = C^2 and h^2(B) = A^2. Degenerate (collinear) comparison
// triangles are accepted. Throws DomainError when B <= 0, a length is
// negative, or the triangle inequality fails.
QuadraticPoly ComparisonQuadratic(const Rational& a, const Rational& b, const Rational& c);

// Subset of {-, 0, +}.
class SignSet {
 public:
  static constexpr std::uint8_t kMinus = 1;
  static constexpr std::uint8_t kZero = 2;
  static constexpr std::uint8_t kPlus = 4;

  constexpr SignSet() = default;
  constexpr explicit SignSet(std::uint8_t bits) : bits_(bits) {}

  constexpr bool has_minus() const { return bits_ & kMinus; }
  constexpr bool has_zero() const { return bits_ & kZero; }
  constexpr bool has_plus() const { return bits_ & kPlus; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr SignSet operator|(SignSet o) const { return SignSet(bits_ | o.bits_); }
  constexpr SignSet& operator|=(SignSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const SignSet&) const = default;

  // "{-,0,+}" style.
  std::string str() const;

 private:
  std::uint8_t bits_ = 0;
};

// The exact set of signs taken by q on [lo, hi]. Throws DomainError
// unless lo < hi.
SignSet QuadSignSet(const QuadraticPoly& q, const Rational& lo, const Rational& hi);

struct PieceSign {
  Rational t_lo;
  Rational t_hi;
  // f^2 - h^2 restricted to this piece.
  QuadraticPoly delta;
  SignSet signs;
};

// Comparison of one vertex against its opposite side.
//
// With v the vertex and (p, q) the opposite side, f(t) = d_tr(v, gamma_pq(t))
// and h^2 is the comparison quadratic for A = d(v,q), B = d(p,q),
// C = d(v,p). Positive signs of f^2 - h^2 mean "fatter than Euclidean",
// negative signs "skinnier".
struct SideComparison {
  int vertex_index = 0;  // 0 = a (side bc), 1 = b (side ac), 2 = c (side ab)
  PiecewiseLinearFn f;
  QuadraticPoly h_squared;
  std::vector<PieceSign> piece_signs;
  SignSet union_signs;
};

enum class CurvatureClass { kFlat, kPositive, kNegative, kUndefined };

std::string_view ToString(CurvatureClass c);

// Flat when only {0}; Positive / Negative when one strict sign occurs;
// Undefined when both strict signs occur.
CurvatureClass ClassFromSigns(SignSet signs);

// An interval on which the comparison has the given strict sign.
struct Witness {
  int vertex_index = 0;
  Rational t_lo;
  Rational t_hi;
  int sign = 0;
};

struct CurvatureReport {
  std::array<ProjectivePoint, 3> triangle;
  // d(b,c), d(a,c), d(a,b): the side opposite each vertex.
  std::array<Rational, 3> side_lengths;
  std::array<SideComparison, 3> comparisons;
  CurvatureClass curvature = CurvatureClass::kFlat;

  // Per side, one interval for each strict sign it shows; filled only when
  // Undefined.
  std::vector<Witness> witnesses;
};

// Vertex `vertex_index` (0, 1, 2) of the triangle (a, b, c) against its
// opposite side. Throws DegenerateError on coincident vertices.
SideComparison CompareSide(int vertex_index, const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c);

// Full Alexandrov classification of the triangle (a, b, c).
CurvatureReport ClassifyCurvature(const ProjectivePoint& a, const ProjectivePoint& b,
                                  const ProjectivePoint& c);

// Class only; skips assembling the report.
CurvatureClass CurvatureOf(const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c);

}  // namespace tropicurv

#endif  // TROPICURV_CURVATURE_HPP_
