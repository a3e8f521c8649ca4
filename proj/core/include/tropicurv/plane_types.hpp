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

#ifndef TROPICURV_PLANE_TYPES_HPP_
#define TROPICURV_PLANE_TYPES_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropicurv/point.hpp"

namespace tropicurv {

// (S_1, S_2, S_3): for vertex j, the set of coordinates (bit i set for
// coordinate i in {0,1,2}) at which x_i - v^(j)_i attains its minimum.
// Packed as S_1 | S_2 << 3 | S_3 << 6.
struct TypeCellLabel {
  std::array<std::uint8_t, 3> sets{};

  std::uint16_t code() const {
    return static_cast<std::uint16_t>(sets[0] | (sets[1] << 3) | (sets[2] << 6));
  }
  static TypeCellLabel FromCode(std::uint16_t code) {
    return {{static_cast<std::uint8_t>(code & 7), static_cast<std::uint8_t>((code >> 3) & 7),
             static_cast<std::uint8_t>((code >> 6) & 7)}};
  }
  bool operator==(const TypeCellLabel&) const = default;
};

// Sorted codes of all labels whose closed cell
//   { x : x_i - v^(j)_i <= x_k - v^(j)_k  for all j, i in S_j, all k }
// is nonempty. Closed under shrinking any S_j (to a nonempty set).
struct TypeComplex {
  std::vector<std::uint16_t> labels;

  bool contains(const TypeCellLabel& l) const;
  bool operator==(const TypeComplex&) const = default;
};

// Decides all 343 candidate cells exactly (difference-constraint
// feasibility). Requires dim 3 and pairwise distinct vertices.
TypeComplex TypeCells(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c);

// Smallest image of the label set under S3 (coordinates) x S3 (vertices).
std::vector<std::uint16_t> CanonicalInvariant(const TypeComplex& tc);

// The image of one complex under a coordinate permutation and a vertex
// relabeling: vertex j's set moves to slot vertex_perm[j], coordinate i
// moves to coord_perm[i].
TypeComplex ApplySymmetry(const TypeComplex& tc, const std::array<int, 3>& coord_perm,
                          const std::array<int, 3>& vertex_perm);

enum class TriangleType : std::uint8_t { kT1 = 0, kT2, kT3, kT4, kT5 };

std::string ToString(TriangleType t);

// Subset of {T1..T5}; `generic` is false when the input did not match a
// reference complex exactly.
struct TriangleTypeSet {
  std::uint8_t bits = 0;
  bool generic = false;

  bool contains(TriangleType t) const { return bits & (1u << static_cast<int>(t)); }
  void insert(TriangleType t) { bits |= static_cast<std::uint8_t>(1u << static_cast<int>(t)); }
  bool is_singleton() const { return bits != 0 && (bits & (bits - 1)) == 0; }
  std::vector<TriangleType> members() const;

  // "{T2}" or "{T1,T5}".
  std::string str() const;
  bool operator==(const TriangleTypeSet&) const = default;
};

// The textbook exemplar triangle of each type. All are generic except
// T5's, whose complex has 39 labels instead of 31.
std::array<ProjectivePoint, 3> TypeExemplar(TriangleType t);

// A generic triangle of each type; its complex is the reference the
// classifier matches against.
std::array<ProjectivePoint, 3> TypeReference(TriangleType t);

// Classifies by matching the canonical invariant against the references'.
// Non-generic inputs get every type whose reference complex refines the
// input's complex (reference labels contained in the input's, up to
// symmetry).
TriangleTypeSet ClassifyType(const ProjectivePoint& a, const ProjectivePoint& b,
                             const ProjectivePoint& c);

}  // namespace tropicurv

#endif  // TROPICURV_PLANE_TYPES_HPP_
