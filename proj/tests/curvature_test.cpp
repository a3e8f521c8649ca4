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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <chrono>

#include "test_support.hpp"
#include "tropicurv/curvature.hpp"
#include "tropicurv/errors.hpp"
#include "tropicurv/plane_types.hpp"

namespace tropicurv {
namespace {

using testing::P;
using testing::R;
using testing::Tri;

CurvatureClass ClassOf(std::string_view text) {
  const auto t = Tri(text);
  return CurvatureOf(t[0], t[1], t[2]);
}

// ---- comparison quadratic ----

TEST(ComparisonQuadraticTest, EquilateralSideThree) {
  EXPECT_EQ(ComparisonQuadratic(3, 3, 3), (QuadraticPoly{1, -3, 9}));
  // 27/4 + (3/2 - t)^2.
  const auto q = ComparisonQuadratic(3, 3, 3);
  for (int k = 0; k <= 6; ++k) {
    const Rational t(k, 2);
    EXPECT_EQ(q(t), Rational(27, 4) + (Rational(3, 2) - t) * (Rational(3, 2) - t));
  }
}

TEST(ComparisonQuadraticTest, EndpointValuesHoldIdentically) {
  RngStream rng(31, 0);
  for (int trial = 0; trial < 500; ++trial) {
    Rational b(rng.UniformInt(1, 50), rng.UniformInt(1, 5));
    Rational c(rng.UniformInt(1, 50), rng.UniformInt(1, 5));
    // Any A between |B - C| and B + C.
    const Rational lo = abs(b - c), hi = b + c;
    const Rational a = lo + (hi - lo) * Rational(rng.UniformInt(0, 20), 20);
    const auto q = ComparisonQuadratic(a, b, c);
    EXPECT_EQ(q(0), c * c);
    EXPECT_EQ(q(b), a * a);
  }
}

TEST(ComparisonQuadraticTest, AcceptsDegenerateAndRejectsInvalid) {
  EXPECT_NO_THROW(ComparisonQuadratic(2, 1, 1));
  EXPECT_THROW(ComparisonQuadratic(3, 1, 1), DomainError);
  EXPECT_THROW(ComparisonQuadratic(1, 0, 1), DomainError);
  EXPECT_THROW(ComparisonQuadratic(-1, 1, 1), DomainError);
}

// ---- sign sets ----

TEST(QuadSignSetTest, DecidesExactSignSets) {
  const QuadraticPoly t2_minus_1{1, 0, -1};
  EXPECT_EQ(QuadSignSet(t2_minus_1, 0, 2).str(), "{-,0,+}");
  EXPECT_EQ(QuadSignSet(t2_minus_1, 2, 3).str(), "{+}");
  EXPECT_EQ(QuadSignSet(t2_minus_1, 0, 1).str(), "{-,0}");
  EXPECT_EQ(QuadSignSet(t2_minus_1, R("-1/2"), R("1/2")).str(), "{-}");
  const QuadraticPoly square{1, -2, 1};
  EXPECT_EQ(QuadSignSet(square, 0, 2).str(), "{0,+}");
  EXPECT_EQ(QuadSignSet(QuadraticPoly{}, 0, 1).str(), "{0}");
  // Irrational roots: t^2 - 2 on [1, 2].
  EXPECT_EQ(QuadSignSet(QuadraticPoly{1, 0, -2}, 1, 2).str(), "{-,0,+}");
  EXPECT_EQ(QuadSignSet(QuadraticPoly{-1, 0, 2}, 0, 1).str(), "{+}");
  EXPECT_THROW(QuadSignSet(square, 1, 1), DomainError);
}

TEST(ClassFromSignsTest, FollowsTheDefinition) {
  using S = SignSet;
  EXPECT_EQ(ClassFromSigns(S(S::kZero)), CurvatureClass::kFlat);
  EXPECT_EQ(ClassFromSigns(S(S::kZero | S::kPlus)), CurvatureClass::kPositive);
  EXPECT_EQ(ClassFromSigns(S(S::kPlus)), CurvatureClass::kPositive);
  EXPECT_EQ(ClassFromSigns(S(S::kZero | S::kMinus)), CurvatureClass::kNegative);
  EXPECT_EQ(ClassFromSigns(S(S::kMinus | S::kPlus)), CurvatureClass::kUndefined);
  EXPECT_EQ(ClassFromSigns(S(S::kMinus | S::kZero | S::kPlus)), CurvatureClass::kUndefined);
}

// ---- golden classifications ----

TEST(GoldenTest, WorkedExamplesClassifyAsStated) {
  const std::vector<std::pair<const char*, CurvatureClass>> cases{
      {"1,3;0,0;3,2", CurvatureClass::kNegative},
      {"0,2;1,0;3,3", CurvatureClass::kPositive},
      {"0,0;2,4;5,1", CurvatureClass::kNegative},
      {"0,4;3,0;5,6", CurvatureClass::kPositive},
      {"0,0;448,449;452,256", CurvatureClass::kUndefined},
      {"5,1;7,3;10,4", CurvatureClass::kFlat},
      {"0,0;3,2;4,1", CurvatureClass::kUndefined},
      {"3,4;6,3;9,5", CurvatureClass::kUndefined},
  };
  for (const auto& [text, want] : cases) {
    const auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(ClassOf(text), want) << text;
    const auto t = Tri(text);
    EXPECT_EQ(ClassifyCurvature(t[0], t[1], t[2]).curvature, want) << text;
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(50));
  }
}

TEST(GoldenTest, SideLengths) {
  auto lengths = [](std::string_view text) {
    const auto t = Tri(text);
    const auto r = ClassifyCurvature(t[0], t[1], t[2]);
    // Reported as d(a,b), d(a,c), d(b,c).
    return std::array<Rational, 3>{r.side_lengths[2], r.side_lengths[1], r.side_lengths[0]};
  };
  EXPECT_EQ(lengths("0,2;1,0;3,3"), (std::array<Rational, 3>{3, 3, 3}));
  EXPECT_EQ(lengths("0,0;2,4;5,1"), (std::array<Rational, 3>{4, 5, 6}));
  EXPECT_EQ(lengths("0,4;3,0;5,6"), (std::array<Rational, 3>{7, 5, 6}));
}

TEST(GoldenTest, SkinnyProfileAndSignSet) {
  const auto t = Tri("1,3;0,0;3,2");
  const auto cmp = CompareSide(0, t[0], t[1], t[2]);
  ASSERT_EQ(cmp.f.pieces().size(), 3u);
  // 3 - t, 2, t on [0,1], [1,2], [2,3].
  EXPECT_EQ(cmp.f.pieces()[0], (AffinePiece{0, 1, 3, -1}));
  EXPECT_EQ(cmp.f.pieces()[1], (AffinePiece{1, 2, 2, 0}));
  EXPECT_EQ(cmp.f.pieces()[2], (AffinePiece{2, 3, 2, 1}));
  EXPECT_EQ(cmp.h_squared, (QuadraticPoly{1, -3, 9}));
  EXPECT_EQ(cmp.union_signs.str(), "{-,0}");
}

TEST(GoldenTest, CounterexampleQuadraticOnSideAc) {
  const auto t = Tri("0,0;448,449;452,256");
  const auto r = ClassifyCurvature(t[0], t[1], t[2]);
  EXPECT_EQ(r.comparisons[1].h_squared, (QuadraticPoly{1, R("-91774/113"), 201601}));
  EXPECT_EQ(r.comparisons[1].union_signs.str(), "{-,0,+}");
  const bool has_ac_witness = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                          [](const Witness& w) { return w.vertex_index == 1; });
  EXPECT_TRUE(has_ac_witness);
}

TEST(GoldenTest, WitnessesCarryTheirSign) {
  const auto t = Tri("0,0;448,449;452,256");
  const auto r = ClassifyCurvature(t[0], t[1], t[2]);
  ASSERT_FALSE(r.witnesses.empty());
  bool minus = false, plus = false;
  for (const auto& w : r.witnesses) {
    const auto& cmp = r.comparisons[w.vertex_index];
    // The witness interval is a piece whose sign set has the stated sign.
    auto it = std::find_if(cmp.piece_signs.begin(), cmp.piece_signs.end(),
                           [&](const PieceSign& ps) { return ps.t_lo == w.t_lo; });
    ASSERT_NE(it, cmp.piece_signs.end());
    EXPECT_TRUE(w.sign < 0 ? it->signs.has_minus() : it->signs.has_plus());
    (w.sign < 0 ? minus : plus) = true;
  }
  EXPECT_TRUE(minus && plus);
}

TEST(GoldenTest, NoWitnessesUnlessUndefined) {
  const auto t = Tri("1,3;0,0;3,2");
  EXPECT_TRUE(ClassifyCurvature(t[0], t[1], t[2]).witnesses.empty());
}

TEST(CurvatureErrorsTest, RejectsCoincidentVertices) {
  EXPECT_THROW(ClassOf("1,1;1,1;2,3"), DegenerateError);
  EXPECT_THROW(CompareSide(0, P("1,1"), P("2,2"), P("2,2")), DegenerateError);
  EXPECT_THROW(CompareSide(3, P("1,1"), P("2,3"), P("2,2")), DomainError);
}

// ---- invariances ----

std::array<ProjectivePoint, 3> Permuted(const std::array<ProjectivePoint, 3>& t,
                                        const std::array<int, 3>& perm) {
  return {t[perm[0]], t[perm[1]], t[perm[2]]};
}

TEST(InvarianceTest, ScalingPreservesClass) {
  RngStream rng(41, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = testing::RandomTriangle(rng, 3 + trial % 4, 6, 2);
    const Rational k(rng.UniformInt(1, 50), rng.UniformInt(1, 50));
    EXPECT_EQ(CurvatureOf(Scale(t[0], k), Scale(t[1], k), Scale(t[2], k)),
              CurvatureOf(t[0], t[1], t[2]));
  }
}

TEST(InvarianceTest, RelabelingAndCoordinateIsometriesPreserveClassAndType) {
  RngStream rng(42, 0);
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = testing::RandomTriangle(rng, 3, 6, 2);
    const auto cls = CurvatureOf(t[0], t[1], t[2]);
    const auto type = ClassifyType(t[0], t[1], t[2]);
    for (const auto& perm : perms) {
      const auto r = Permuted(t, perm);
      EXPECT_EQ(CurvatureOf(r[0], r[1], r[2]), cls);
      EXPECT_EQ(ClassifyType(r[0], r[1], r[2]), type);
      const std::array<std::size_t, 3> cp{static_cast<std::size_t>(perm[0]),
                                          static_cast<std::size_t>(perm[1]),
                                          static_cast<std::size_t>(perm[2])};
      const auto a = PermuteCoordinates(t[0], cp);
      const auto b = PermuteCoordinates(t[1], cp);
      const auto c = PermuteCoordinates(t[2], cp);
      EXPECT_EQ(CurvatureOf(a, b, c), cls);
      EXPECT_EQ(ClassifyType(a, b, c), type);
    }
  }
}

TEST(InvarianceTest, TranslationPreservesClass) {
  RngStream rng(43, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = testing::RandomTriangle(rng, 4, 6, 2);
    std::vector<Rational> shift(3);
    for (auto& s : shift) s = testing::RandomRational(rng, 20, 3);
    auto move = [&](const ProjectivePoint& p) {
      auto r = p.reduced();
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += shift[i];
      return ProjectivePoint::FromReduced(r);
    };
    EXPECT_EQ(CurvatureOf(move(t[0]), move(t[1]), move(t[2])), CurvatureOf(t[0], t[1], t[2]));
  }
}

TEST(InvarianceTest, ComparisonsVanishAtBothEndpoints) {
  RngStream rng(44, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = testing::RandomTriangle(rng, 3 + trial % 6);
    const auto r = ClassifyCurvature(t[0], t[1], t[2]);
    for (const auto& cmp : r.comparisons) {
      const auto& first = cmp.piece_signs.front();
      const auto& last = cmp.piece_signs.back();
      EXPECT_EQ(first.delta(first.t_lo), 0);
      EXPECT_EQ(last.delta(last.t_hi), 0);
      EXPECT_EQ(first.t_lo, 0);
      EXPECT_EQ(last.t_hi, r.side_lengths[cmp.vertex_index]);
    }
  }
}

TEST(InvarianceTest, ClassOnlyPathAgreesWithFullReport) {
  RngStream rng(45, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = testing::RandomTriangle(rng, 3 + trial % 6);
    EXPECT_EQ(CurvatureOf(t[0], t[1], t[2]), ClassifyCurvature(t[0], t[1], t[2]).curvature);
  }
}

}  // namespace
}  // namespace tropicurv
