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

#ifndef TROPICURV_TREES_HPP_
#define TROPICURV_TREES_HPP_

#include <cstddef>
#include <vector>

#include "tropicurv/point.hpp"
#include "tropicurv/rational.hpp"
#include "tropicurv/rng.hpp"

namespace tropicurv {

// Pairwise leaf distances of an equidistant tree, indexed by leaf pairs
// in the order (0,1), (0,2), ..., (0,N-1), (1,2), ..., (N-2,N-1).
struct UltrametricVector {
  std::size_t n_leaves = 0;
  std::vector<Rational> entries;

  // Throws DomainError when i == j or out of range.
  const Rational& at(std::size_t i, std::size_t j) const;

  // Every triple attains its maximum at least twice.
  bool SatisfiesThreePointCondition() const;

  // The vector as a point of R^{N choose 2} / R1.
  ProjectivePoint ToPoint() const;

  bool operator==(const UltrametricVector&) const = default;
};

// Index of the pair {i, j} in UltrametricVector::entries.
std::size_t PairIndex(std::size_t n_leaves, std::size_t i, std::size_t j);

// A rooted binary tree: node ids 0..N-1 are leaves, N..2N-2 internal.
// parent[root] == -1.
struct RootedTree {
  std::size_t n_leaves = 0;
  std::vector<long> parent;
  std::vector<Rational> height;  // zero at leaves
};

// u_ij = 2 * height(lca(i, j)).
UltrametricVector Cophenetic(const RootedTree& tree);

// Uniform labeled rooted binary topology (random edge insertion), root at
// `height`, other internal heights sorted uniforms below it assigned in
// breadth-first order. Throws DomainError when n_leaves < 3 or
// height <= 0.
RootedTree SampleRootedTree(std::size_t n_leaves, const Rational& height, RngStream& rng);

// Cophenetic(SampleRootedTree(...)).
UltrametricVector SampleUltrametricTree(std::size_t n_leaves, const Rational& height,
                                        RngStream& rng);

// Recovers the hierarchy of `u`, multiplies every internal height by
// 1 + eps * U(-1, 1), and reassigns the sorted results bottom-up so that
// parents stay above children. Throws DomainError unless 0 <= eps < 1 or
// if `u` is not ultrametric.
UltrametricVector PerturbTree(const UltrametricVector& u, const Rational& eps, RngStream& rng);

}  // namespace tropicurv

#endif  // TROPICURV_TREES_HPP_
