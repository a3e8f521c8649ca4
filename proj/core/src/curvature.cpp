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

#include "tropicurv/curvature.hpp"

#include <algorithm>

namespace tropicurv {

QuadraticPoly ComparisonQuadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (b <= 0) throw DomainError("comparison side B must be positive");
  if (a < 0 || c < 0) throw DomainError("side lengths must be nonnegative");
  if (a > b + c || b > a + c || c > a + b) {
    throw DomainError("side lengths " + ToString(a) + ", " + ToString(b) + ", " + ToString(c) +
                      " violate the triangle inequality");
  }
  return {Rational(1), (a * a - b * b - c * c) / b, c * c};
}

std::string SignSet::str() const {
  std::string out = "{";
  auto add = [&out](const char* s) {
    if (out.size() > 1) out += ",";
    out += s;
  };
  if (has_minus()) add("-");
  if (has_zero()) add("0");
  if (has_plus()) add("+");
  return out + "}";
}

SignSet QuadSignSet(const QuadraticPoly& q, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("sign set needs lo < hi");
  if (q.is_zero()) return SignSet(SignSet::kZero);

  // A quadratic attains its extremes on [lo, hi] at the ends or the vertex.
  Rational mn = q(lo);
  Rational mx = q(hi);
  if (mn > mx) std::swap(mn, mx);
  if (q.c2 != 0) {
    const Rational vertex = -q.c1 / (2 * q.c2);
    if (vertex > lo && vertex < hi) {
      Rational v = q(vertex);
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
  }
  std::uint8_t bits = 0;
  if (mn < 0) bits |= SignSet::kMinus;
  if (mx > 0) bits |= SignSet::kPlus;
  if (mn <= 0 && mx >= 0) bits |= SignSet::kZero;
  return SignSet(bits);
}

std::string_view ToString(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::kFlat:
      return "Flat";
    case CurvatureClass::kPositive:
      return "Positive";
    case CurvatureClass::kNegative:
      return "Negative";
    case CurvatureClass::kUndefined:
      return "Undefined";
  }
  return "?";
}

CurvatureClass ClassFromSigns(SignSet signs) {
  if (signs.has_plus() && signs.has_minus()) return CurvatureClass::kUndefined;
  if (signs.has_plus()) return CurvatureClass::kPositive;
  if (signs.has_minus()) return CurvatureClass::kNegative;
  return CurvatureClass::kFlat;
}

namespace {

void RequireDistinct(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
  if (a.dim() != b.dim() || a.dim() != c.dim()) {
    throw DimensionError("triangle vertices have different dimensions");
  }
  if (a == b || a == c || b == c) throw DegenerateError("triangle has coincident vertices");
}

// f^2 - h^2 on one affine piece of f.
QuadraticPoly PieceDelta(const AffinePiece& piece, const QuadraticPoly& h2) {
  // f(t) = slope * t + offset on this piece.
  const Rational& slope = piece.slope;
  const Rational offset = piece.value_at_lo - slope * piece.t_lo;
  return {slope * slope - h2.c2, 2 * slope * offset - h2.c1, offset * offset - h2.c0};
}

SideComparison CompareSideUnchecked(int vertex_index, const ProjectivePoint& a,
                                    const ProjectivePoint& b, const ProjectivePoint& c) {
  const ProjectivePoint* v = &a;
  const ProjectivePoint* p = &b;
  const ProjectivePoint* q = &c;
  if (vertex_index == 1) {
    v = &b;
    p = &a;
    q = &c;
  } else if (vertex_index == 2) {
    v = &c;
    p = &a;
    q = &b;
  } else if (vertex_index != 0) {
    throw DomainError("vertex index must be 0, 1 or 2");
  }

  SideComparison cmp;
  cmp.vertex_index = vertex_index;
  const TropicalSegment seg(*p, *q);
  cmp.f = DistanceProfile(*v, seg);
  cmp.h_squared = ComparisonQuadratic(TropDistance(*v, *q), seg.length(), TropDistance(*v, *p));
  cmp.piece_signs.reserve(cmp.f.pieces().size());
  for (const auto& piece : cmp.f.pieces()) {
    QuadraticPoly delta = PieceDelta(piece, cmp.h_squared);
    SignSet signs = QuadSignSet(delta, piece.t_lo, piece.t_hi);
    cmp.union_signs |= signs;
    cmp.piece_signs.push_back({piece.t_lo, piece.t_hi, std::move(delta), signs});
  }
  return cmp;
}

}  // namespace

SideComparison CompareSide(int vertex_index, const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c) {
  RequireDistinct(a, b, c);
  return CompareSideUnchecked(vertex_index, a, b, c);
}

CurvatureReport ClassifyCurvature(const ProjectivePoint& a, const ProjectivePoint& b,
                                  const ProjectivePoint& c) {
  RequireDistinct(a, b, c);
  CurvatureReport report{
      .triangle = {a, b, c},
      .side_lengths = {TropDistance(b, c), TropDistance(a, c), TropDistance(a, b)},
      .comparisons = {CompareSideUnchecked(0, a, b, c), CompareSideUnchecked(1, a, b, c),
                      CompareSideUnchecked(2, a, b, c)},
      .curvature = CurvatureClass::kFlat,
      .witnesses = {},
  };
  SignSet all;
  for (const auto& cmp : report.comparisons) all |= cmp.union_signs;
  report.curvature = ClassFromSigns(all);

  if (report.curvature == CurvatureClass::kUndefined) {
    for (const auto& cmp : report.comparisons) {
      for (int sign : {-1, 1}) {
        auto it = std::find_if(cmp.piece_signs.begin(), cmp.piece_signs.end(),
                               [sign](const PieceSign& ps) {
                                 return sign < 0 ? ps.signs.has_minus() : ps.signs.has_plus();
                               });
        if (it != cmp.piece_signs.end()) {
          report.witnesses.push_back({cmp.vertex_index, it->t_lo, it->t_hi, sign});
        }
      }
    }
  }
  return report;
}

CurvatureClass CurvatureOf(const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c) {
  RequireDistinct(a, b, c);
  SignSet all;
  for (int v = 0; v < 3; ++v) {
    all |= CompareSideUnchecked(v, a, b, c).union_signs;
    if (all.has_plus() && all.has_minus()) break;
  }
  return ClassFromSigns(all);
}

}  // namespace tropicurv
