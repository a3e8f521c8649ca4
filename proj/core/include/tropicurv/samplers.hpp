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

#ifndef TROPICURV_SAMPLERS_HPP_
#define TROPICURV_SAMPLERS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropicurv/plane_types.hpp"
#include "tropicurv/point.hpp"
#include "tropicurv/polytope.hpp"
#include "tropicurv/rng.hpp"

namespace tropicurv {

using Triangle = std::array<ProjectivePoint, 3>;

// How "a uniform triangle from the simplex" is drawn.
enum class SimplexReading {
  // The 3(n-1) short-hand coordinates of the three vertices are jointly
  // uniform on the probability simplex (nonnegative, summing to one).
  kJoint,
  // Each vertex is independently uniform on the standard simplex in R^n.
  kVertex,
  // The 3(n-1) short-hand coordinates are independent uniforms on [0, 1).
  kCube,
};

std::string_view ToString(SimplexReading reading);
// "joint", "vertex" or "cube". Throws ConfigError otherwise.
SimplexReading ParseSimplexReading(std::string_view text);

// Uniform point of {x in R^m : x_i >= 0, sum x_i = 1}, built exactly from
// the spacings of m - 1 sorted dyadic uniforms.
std::vector<Rational> SampleProbabilitySimplex(std::size_t m, RngStream& rng);

// A point uniform on the standard simplex of R^n, canonicalized.
// Throws DomainError when n < 3.
ProjectivePoint SampleSimplexVertex(std::size_t n, RngStream& rng);

// True when two vertices coincide or one vertex lies on the tropical
// segment joining the other two.
bool IsDegenerateTriangle(const Triangle& t);

// A triangle in R^n / R1 under the given reading. Degenerate draws are
// redrawn.
Triangle SampleSimplexTriangle(std::size_t n, SimplexReading reading, RngStream& rng);

// Six independent integers in [lo, hi] as three plane points; draws with
// coincident vertices are redrawn, collinear ones are kept. Throws
// DomainError unless lo < hi.
Triangle SampleIntegerTriangle(std::int64_t lo, std::int64_t hi, RngStream& rng);

// Inequality systems on (a1, a2, b1, b2, c1, c2).
enum class InequalitySystem {
  kT1,         // a1<b1<c1, a2<b2<c2, b1-b2 < a1-a2 < c1-c2
  kT2,         // a1<b1<c1, a2<c2<b2, a1-a2 < b1-b2
  kT3,         // a1<b1<c1, a2<b2<c2, a1-a2 < b1-b2 < c1-c2
  kT3Printed,  // a1<b1<c1, a2<b2<c2, c1-c2 < b1-b2
  kT4,         // a1<b1<c1, b2<a2<c2, a1-a2 < c1-c2, b1-b2 < c1-c2
  kT5,         // a1<b1<c1, b2<a2<c2, a1-a2 < c1-c2 < b1-b2
};

std::string_view ToString(InequalitySystem system);
// "T1-ineq", ..., "T5-ineq" and "T3-printed". Throws ConfigError.
InequalitySystem ParseInequalitySystem(std::string_view text);

// True when the coordinates satisfy the system's strict inequalities.
bool SatisfiesSystem(InequalitySystem system, const std::array<Rational, 6>& x);

// The system with strictness relaxed, intersected with x >= 0 and
// sum x = 1.
Polytope RegionForSystem(InequalitySystem system);

Triangle TriangleFromPlaneCoords(const std::array<Rational, 6>& x);
std::array<Rational, 6> PlaneCoords(const Triangle& t);

// `count` triangles from the region's hit-and-run chain, started at its
// Chebyshev center.
std::vector<Triangle> SampleRegion(InequalitySystem system, std::size_t count, RngStream& rng,
                                   const HitAndRunOptions& options = {});

struct ConditionedSample {
  Triangle triangle;
  std::size_t tries = 0;  // draws including the accepted one
};

// Redraws plane simplex triangles until ClassifyType returns exactly
// {type}. Throws DomainError, quoting the acceptance rate, after
// `max_tries` rejections.
ConditionedSample SampleTypeConditioned(TriangleType type, RngStream& rng, std::size_t max_tries,
                                        SimplexReading reading = SimplexReading::kJoint);

// A triangle in R^{n+1} / R1 with short-hand coordinates satisfying
//   a_i < b_i < c_i (i < n),  a_n > b_n > c_n,
//   b_1 - a_1 > ... > b_{n-1} - a_{n-1},
//   c_1 - b_1 > ... > c_{n-1} - b_{n-1}.
// Throws DomainError when n < 3.
Triangle SampleFatFamily(std::size_t n, RngStream& rng);

// Checks the chains above exactly.
bool InFatFamily(const Triangle& t);

}  // namespace tropicurv

#endif  // TROPICURV_SAMPLERS_HPP_
