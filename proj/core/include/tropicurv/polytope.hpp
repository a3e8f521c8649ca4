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

#ifndef TROPICURV_POLYTOPE_HPP_
#define TROPICURV_POLYTOPE_HPP_

#include <cstddef>
#include <vector>

#include "tropicurv/rational.hpp"
#include "tropicurv/rng.hpp"

namespace tropicurv {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// { x : G x <= h, E x = e }. The equality block may be empty.
struct Polytope {
  RationalMatrix G;
  RationalVector h;
  RationalMatrix E;
  RationalVector e;

  // Number of variables. Throws DimensionError on ragged input.
  std::size_t dim() const;

  bool Contains(const RationalVector& x) const;
  // Equalities hold and every inequality is strict.
  bool StrictlyContains(const RationalVector& x) const;
};

// Result of maximizing c.x subject to A x <= b, x >= 0.
struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  RationalVector x;
  Rational value;
};

// Exact two-phase simplex with Bland's rule (so it cannot cycle).
LpResult MaximizeLp(const RationalMatrix& A, const RationalVector& b, const RationalVector& c);

// Center of a largest ball inside the polytope, measured within the
// affine hull of the equalities. Ball norms use certified rational upper
// bounds of the Euclidean row norms, so the result is always strictly
// interior. Throws DegenerateError when the region is empty or has no
// interior in its affine hull, DomainError when it is unbounded.
RationalVector ChebyshevCenter(const Polytope& poly);

// The closed parameter range {lambda : x + lambda d in poly}. `d` must
// satisfy E d = 0. Throws DomainError if the chord is unbounded.
struct Chord {
  Rational lo;
  Rational hi;
};
Chord ExactChord(const Polytope& poly, const RationalVector& x, const RationalVector& d);

struct HitAndRunOptions {
  std::size_t burn_in = 1000;
  std::size_t thinning = 10;
};

// Hit-and-run targeting the uniform distribution on the polytope. Moves
// are computed in double precision inside an exact parametrization of the
// affine hull; every emitted point is converted to exact rationals,
// satisfies the equalities exactly and the inequalities strictly. Points
// that fail the exact strictness check are never emitted.
//
// Throws DomainError unless x0 is strictly interior, or if the region is
// unbounded along a sampled direction.
std::vector<RationalVector> HitAndRun(const Polytope& poly, const RationalVector& x0,
                                      std::size_t count, const HitAndRunOptions& options,
                                      RngStream& rng);

}  // namespace tropicurv

#endif  // TROPICURV_POLYTOPE_HPP_
