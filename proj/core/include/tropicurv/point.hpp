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

#ifndef TROPICURV_POINT_HPP_
#define TROPICURV_POINT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tropicurv/rational.hpp"

namespace tropicurv {

// A point of the tropical projective torus R^n / R1.
//
// Stored in canonical form: the representative whose first coordinate is
// zero. Two raw vectors that differ by a multiple of (1, ..., 1) produce
// identical ProjectivePoints, so operator== is equality in the quotient.
class ProjectivePoint {
 public:
  // Canonicalizes `raw` by subtracting raw[0] from every entry.
  // Throws DimensionError when raw.size() < 2.
  static ProjectivePoint Canonicalize(std::span<const Rational> raw);

  // Builds [(0, x_1, ..., x_m)] from the short-hand coordinates
  // (x_1, ..., x_m), i.e. a point of R^{m+1} / R1.
  static ProjectivePoint FromReduced(std::span<const Rational> reduced);

  // Ambient dimension n (the point lives in R^n / R1).
  std::size_t dim() const { return coords_.size(); }

  // The empty point; a placeholder to be assigned before use.
  ProjectivePoint() = default;

  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  // Coordinates without the leading zero.
  std::vector<Rational> reduced() const;

  bool operator==(const ProjectivePoint&) const = default;
  bool operator<(const ProjectivePoint& other) const { return coords_ < other.coords_; }

 private:
  explicit ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::vector<Rational> coords_;
};

// Same as ProjectivePoint::Canonicalize.
ProjectivePoint Canonicalize(std::span<const Rational> raw);

// Tropical metric: max_i (p_i - q_i) - min_i (p_i - q_i).
Rational TropDistance(const ProjectivePoint& p, const ProjectivePoint& q);

// The norm of the isometric model R^{n-1}:
// max( max_{i<j} |v_i - v_j|, max_i |v_i| ).
Rational TropNorm(std::span<const Rational> v);

// Multiplies every coordinate by `factor` (tropical scaling of a triangle).
ProjectivePoint Scale(const ProjectivePoint& p, const Rational& factor);

// Permutes the n ambient coordinates: result_i = p_{perm[i]}.
ProjectivePoint PermuteCoordinates(const ProjectivePoint& p, std::span<const std::size_t> perm);

// "(0, 2, 3)" in reduced-free full form.
std::string ToString(const ProjectivePoint& p);

}  // namespace tropicurv

#endif  // TROPICURV_POINT_HPP_
