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

#include <numeric>
#include <set>

#include "test_support.hpp"
#include "tropicurv/curvature.hpp"
#include "tropicurv/errors.hpp"
#include "tropicurv/plane_types.hpp"
#include "tropicurv/polytope.hpp"
#include "tropicurv/rng.hpp"
#include "tropicurv/samplers.hpp"

namespace tropicurv {
namespace {

using testing::R;
using testing::Tri;

// ---- rng ----

TEST(RngTest, SameStreamIsReproducible) {
  RngStream a(5, 7), b(5, 7);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.UniformRational(), b.UniformRational());
    EXPECT_EQ(a.UniformInt(-3, 9), b.UniformInt(-3, 9));
    EXPECT_EQ(a.Normal(), b.Normal());
  }
}

TEST(RngTest, DistinctStreamsDiffer) {
  RngStream a(5, 7), b(5, 8), c(6, 7);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.UniformDouble();
    same_ab += x == b.UniformDouble();
    same_ac += x == c.UniformDouble();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(RngTest, RangesAndExactness) {
  RngStream rng(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto k = rng.UniformInt(-2, 2);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 2);
    const double u = rng.UniformDouble();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_GT(rng.OpenUniformDouble(), 0.0);
    EXPECT_GT(rng.Exponential(), 0.0);
  }
  RngStream x(2, 3), y(2, 3);
  EXPECT_EQ(FromDouble(x.UniformDouble()), y.UniformRational());
  EXPECT_THROW(rng.UniformInt(3, 2), DomainError);
}

// ---- simplex and grid ----

TEST(SimplexSamplerTest, ProbabilitySimplexIsExact) {
  RngStream rng(2, 0);
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto x = SampleProbabilitySimplex(m, rng);
    ASSERT_EQ(x.size(), m);
    EXPECT_EQ(std::accumulate(x.begin(), x.end(), Rational(0)), 1);
    for (const auto& v : x) EXPECT_GE(v, 0);
  }
}

TEST(SimplexSamplerTest, VerticesAreDeterministicAndValid) {
  for (std::size_t n = 3; n <= 8; ++n) {
    RngStream a(3, n), b(3, n);
    const auto p = SampleSimplexVertex(n, a);
    EXPECT_EQ(p, SampleSimplexVertex(n, b));
    EXPECT_EQ(p.dim(), n);
    EXPECT_EQ(p[0], 0);
    // Coordinates of a simplex point differ by less than 1.
    for (std::size_t i = 1; i < n; ++i) EXPECT_LT(abs(p[i]), 1);
  }
  RngStream rng(3, 0);
  EXPECT_THROW(SampleSimplexVertex(2, rng), DomainError);
}

TEST(SimplexSamplerTest, TrianglesAreNonDegenerateForEveryReading) {
  for (auto reading : {SimplexReading::kJoint, SimplexReading::kVertex, SimplexReading::kCube}) {
    RngStream rng(4, static_cast<std::uint64_t>(reading));
    for (int i = 0; i < 200; ++i) {
      const auto t = SampleSimplexTriangle(3 + i % 6, reading, rng);
      EXPECT_FALSE(IsDegenerateTriangle(t));
      EXPECT_EQ(t[0].dim(), static_cast<std::size_t>(3 + i % 6));
    }
  }
  EXPECT_EQ(ParseSimplexReading("cube"), SimplexReading::kCube);
  EXPECT_EQ(ToString(SimplexReading::kJoint), "joint");
  EXPECT_THROW(ParseSimplexReading("sphere"), ConfigError);
}

TEST(SimplexSamplerTest, DetectsDegenerateTriangles) {
  EXPECT_TRUE(IsDegenerateTriangle(Tri("1,1;1,1;2,3")));
  // (1,1) lies on the segment from (0,0) to (1,2).
  EXPECT_TRUE(IsDegenerateTriangle(Tri("0,0;1,1;1,2")));
  EXPECT_FALSE(IsDegenerateTriangle(Tri("1,3;0,0;3,2")));
}

TEST(GridSamplerTest, IntegerCoordinatesInRangeWithoutDuplicates) {
  RngStream rng(5, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto t = SampleIntegerTriangle(0, 10, rng);
    EXPECT_FALSE(t[0] == t[1] || t[0] == t[2] || t[1] == t[2]);
    for (const auto& p : t) {
      for (std::size_t k = 1; k < 3; ++k) {
        EXPECT_EQ(denominator(p[k]), 1);
        EXPECT_GE(p[k], 0);
        EXPECT_LE(p[k], 10);
      }
    }
  }
  EXPECT_THROW(SampleIntegerTriangle(3, 3, rng), DomainError);
}

// ---- linear programming and polytopes ----

Polytope UnitSquare() {
  return {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 0, 1, 0}, {}, {}};
}

TEST(LpTest, SolvesSmallPrograms) {
  const auto r = MaximizeLp({{1, 0}, {0, 1}}, {1, 2}, {1, 1});
  ASSERT_EQ(r.status, LpResult::Status::kOptimal);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.x, (RationalVector{1, 2}));
  EXPECT_EQ(MaximizeLp({{1, 1}}, {-1}, {1, 0}).status, LpResult::Status::kInfeasible);
  EXPECT_EQ(MaximizeLp({{1, -1}}, {1}, {1, 1}).status, LpResult::Status::kUnbounded);
  // Needs phase one: x + y >= 2, x <= 3, y <= 3, maximize -x - y.
  const auto m = MaximizeLp({{-1, -1}, {1, 0}, {0, 1}}, {-2, 3, 3}, {-1, -1});
  ASSERT_EQ(m.status, LpResult::Status::kOptimal);
  EXPECT_EQ(m.value, -2);
}

TEST(PolytopeTest, ChebyshevCenterOfUnitSquare) {
  EXPECT_EQ(ChebyshevCenter(UnitSquare()), (RationalVector{R("1/2"), R("1/2")}));
}

TEST(PolytopeTest, ChebyshevCenterOfSimplexIsInterior) {
  const Polytope tri{{{-1, 0}, {0, -1}, {1, 1}}, {0, 0, 1}, {}, {}};
  EXPECT_TRUE(tri.StrictlyContains(ChebyshevCenter(tri)));
  // With an equality: the probability simplex in R^3.
  const Polytope flat{{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, {0, 0, 0}, {{1, 1, 1}}, {1}};
  const auto c = ChebyshevCenter(flat);
  EXPECT_TRUE(flat.StrictlyContains(c));
  EXPECT_EQ(c, (RationalVector{R("1/3"), R("1/3"), R("1/3")}));
}

TEST(PolytopeTest, RejectsEmptyLowerDimensionalAndUnboundedRegions) {
  const Polytope empty{{{1, 0}, {-1, 0}}, {0, -1}, {}, {}};
  EXPECT_THROW(ChebyshevCenter(empty), DegenerateError);
  const Polytope segment{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 0, 0, 0}, {}, {}};
  EXPECT_THROW(ChebyshevCenter(segment), DegenerateError);
  const Polytope half{{{1, 0}}, {1}, {}, {}};
  EXPECT_THROW(ChebyshevCenter(half), DomainError);
  const Polytope ragged{{{1, 0}, {1}}, {1, 1}, {}, {}};
  EXPECT_THROW((void)ragged.dim(), DimensionError);
}

TEST(PolytopeTest, ExactChordThroughSquareCenter) {
  const auto chord = ExactChord(UnitSquare(), {R("1/2"), R("1/2")}, {1, 0});
  EXPECT_EQ(chord.lo, R("-1/2"));
  EXPECT_EQ(chord.hi, R("1/2"));
  const auto diag = ExactChord(UnitSquare(), {R("1/4"), R("1/2")}, {1, 1});
  EXPECT_EQ(diag.lo, R("-1/4"));
  EXPECT_EQ(diag.hi, R("1/2"));
}

TEST(HitAndRunTest, UniformOnSquare) {
  RngStream rng(6, 0);
  const auto square = UnitSquare();
  const auto pts = HitAndRun(square, {R("1/2"), R("1/2")}, 10000, {100, 5}, rng);
  ASSERT_EQ(pts.size(), 10000u);
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    ASSERT_TRUE(square.StrictlyContains(p));
    mx += ToDouble(p[0]);
    my += ToDouble(p[1]);
  }
  EXPECT_NEAR(mx / 10000, 0.5, 0.02);
  EXPECT_NEAR(my / 10000, 0.5, 0.02);
}

TEST(HitAndRunTest, RequiresInteriorStart) {
  RngStream rng(6, 1);
  EXPECT_THROW(HitAndRun(UnitSquare(), {0, R("1/2")}, 10, {}, rng), DomainError);
}

TEST(HitAndRunTest, DeterministicForAStream) {
  RngStream a(7, 0), b(7, 0);
  EXPECT_EQ(HitAndRun(UnitSquare(), {R("1/2"), R("1/2")}, 50, {10, 2}, a),
            HitAndRun(UnitSquare(), {R("1/2"), R("1/2")}, 50, {10, 2}, b));
}

// ---- inequality regions ----

TEST(RegionTest, SamplesSatisfyTheirSystemsStrictly) {
  for (auto sys : {InequalitySystem::kT1, InequalitySystem::kT2, InequalitySystem::kT3,
                   InequalitySystem::kT3Printed, InequalitySystem::kT4, InequalitySystem::kT5}) {
    RngStream rng(8, static_cast<std::uint64_t>(sys));
    const auto poly = RegionForSystem(sys);
    for (const auto& t : SampleRegion(sys, 200, rng, {200, 5})) {
      const auto x = PlaneCoords(t);
      EXPECT_TRUE(SatisfiesSystem(sys, x)) << ToString(sys);
      EXPECT_TRUE(poly.StrictlyContains(RationalVector(x.begin(), x.end())));
      EXPECT_EQ(TriangleFromPlaneCoords(x), t);
    }
  }
  EXPECT_EQ(ParseInequalitySystem("T4-ineq"), InequalitySystem::kT4);
  EXPECT_THROW(ParseInequalitySystem("T6-ineq"), ConfigError);
}

TEST(RegionTest, PrintedT3RegionContainsNormalizedInstance) {
  std::array<Rational, 6> x{0, 0, 2, 1, 5, R("9/2")};
  const Rational sum = std::accumulate(x.begin(), x.end(), Rational(0));
  for (auto& v : x) v /= sum;
  EXPECT_TRUE(SatisfiesSystem(InequalitySystem::kT3Printed, x));
  EXPECT_TRUE(RegionForSystem(InequalitySystem::kT3Printed)
                  .Contains(RationalVector(x.begin(), x.end())));
  EXPECT_FALSE(SatisfiesSystem(InequalitySystem::kT3, x));
}

TEST(RegionTest, ClassifiedSystemsHaveFixedCurvature) {
  struct Case {
    InequalitySystem sys;
    CurvatureClass want;
  };
  for (const auto& [sys, want] : {Case{InequalitySystem::kT2, CurvatureClass::kUndefined},
                                  Case{InequalitySystem::kT4, CurvatureClass::kUndefined},
                                  Case{InequalitySystem::kT3, CurvatureClass::kPositive}}) {
    RngStream rng(9, static_cast<std::uint64_t>(sys));
    for (const auto& t : SampleRegion(sys, 500, rng)) {
      EXPECT_EQ(CurvatureOf(t[0], t[1], t[2]), want) << ToString(sys);
    }
  }
}

// ---- type-conditioned rejection ----

TEST(ConditionedTest, AcceptedSamplesHaveTheRequestedType) {
  RngStream rng(10, 0);
  for (int i = 0; i < 50; ++i) {
    const auto s = SampleTypeConditioned(TriangleType::kT1, rng, 100000);
    EXPECT_EQ(ClassifyType(s.triangle[0], s.triangle[1], s.triangle[2]).str(), "{T1}");
    EXPECT_GE(s.tries, 1u);
  }
}

double AcceptanceRate(TriangleType type, int accepted, std::uint64_t stream) {
  RngStream rng(11, stream);
  std::size_t tries = 0;
  for (int i = 0; i < accepted; ++i) tries += SampleTypeConditioned(type, rng, 100000).tries;
  return 100.0 * accepted / static_cast<double>(tries);
}

TEST(ConditionedTest, AcceptanceRatesMatchTypeProportions) {
  EXPECT_NEAR(AcceptanceRate(TriangleType::kT5, 150, 0), 6.0, 3.0);
  EXPECT_NEAR(AcceptanceRate(TriangleType::kT2, 600, 1), 35.9, 5.0);
}

TEST(ConditionedTest, ReportsExhaustion) {
  RngStream rng(10, 1);
  try {
    SampleTypeConditioned(TriangleType::kT5, rng, 1);
    SampleTypeConditioned(TriangleType::kT5, rng, 1);
    SampleTypeConditioned(TriangleType::kT5, rng, 1);
    FAIL() << "expected exhaustion";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("acceptance rate"), std::string::npos);
  }
}

// ---- fat family ----

TEST(FatFamilyTest, HandBuiltInstanceIsFat) {
  // Increasing gaps 3, 2 on the first coordinates; the last coordinate
  // descends in unit steps.
  const auto t = Tri("0,0,2;3,2,1;6,4,0");
  EXPECT_TRUE(InFatFamily(t));
  EXPECT_EQ(CurvatureOf(t[0], t[1], t[2]), CurvatureClass::kPositive);
  EXPECT_FALSE(InFatFamily(Tri("0,0,2;3,3,1;6,6,0")));
}

TEST(FatFamilyTest, SamplesSatisfyTheChainsAndAreFat) {
  for (std::size_t n = 3; n <= 8; ++n) {
    RngStream rng(12, n);
    for (int i = 0; i < 150; ++i) {
      const auto t = SampleFatFamily(n, rng);
      ASSERT_EQ(t[0].dim(), n + 1);
      EXPECT_TRUE(InFatFamily(t));
      EXPECT_EQ(CurvatureOf(t[0], t[1], t[2]), CurvatureClass::kPositive);
    }
  }
  RngStream rng(12, 0);
  EXPECT_THROW(SampleFatFamily(2, rng), DomainError);
}

}  // namespace
}  // namespace tropicurv
