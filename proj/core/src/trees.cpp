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

#include "tropicurv/trees.hpp"

#include <algorithm>
#include <deque>

namespace tropicurv {

std::size_t PairIndex(std::size_t n_leaves, std::size_t i, std::size_t j) {
  if (i == j || i >= n_leaves || j >= n_leaves) throw DomainError("invalid leaf pair");
  if (i > j) std::swap(i, j);
  // Pairs (i', *) with i' < i come first.
  return i * n_leaves - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& UltrametricVector::at(std::size_t i, std::size_t j) const {
  return entries.at(PairIndex(n_leaves, i, j));
}

bool UltrametricVector::SatisfiesThreePointCondition() const {
  if (entries.size() != n_leaves * (n_leaves - 1) / 2) return false;
  for (const auto& x : entries) {
    if (x < 0) return false;
  }
  for (std::size_t i = 0; i < n_leaves; ++i) {
    for (std::size_t j = i + 1; j < n_leaves; ++j) {
      for (std::size_t k = j + 1; k < n_leaves; ++k) {
        std::array<Rational, 3> v{at(i, j), at(i, k), at(j, k)};
        std::sort(v.begin(), v.end());
        if (v[1] != v[2]) return false;
      }
    }
  }
  return true;
}

ProjectivePoint UltrametricVector::ToPoint() const {
  return ProjectivePoint::Canonicalize(entries);
}

UltrametricVector Cophenetic(const RootedTree& tree) {
  const std::size_t n = tree.n_leaves;
  UltrametricVector u{n, std::vector<Rational>(n * (n - 1) / 2)};
  auto ancestors = [&](long v) {
    std::vector<long> path;
    for (; v != -1; v = tree.parent[v]) path.push_back(v);
    return path;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = ancestors(static_cast<long>(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      for (long v = static_cast<long>(j); v != -1; v = tree.parent[v]) {
        if (std::find(pi.begin(), pi.end(), v) != pi.end()) {
          u.entries[PairIndex(n, i, j)] = 2 * tree.height[v];
          break;
        }
      }
    }
  }
  return u;
}

RootedTree SampleRootedTree(std::size_t n_leaves, const Rational& height, RngStream& rng) {
  if (n_leaves < 3) throw DomainError("trees need at least 3 leaves");
  if (height <= 0) throw DomainError("tree height must be positive");
  const std::size_t total = 2 * n_leaves - 1;
  RootedTree tree{n_leaves, std::vector<long>(total, -1), std::vector<Rational>(total)};

  // Leaves 0 and 1 under the first internal node, then each new leaf
  // splits a uniformly chosen edge (the edge above the root included).
  std::vector<long> present{0, 1, static_cast<long>(n_leaves)};
  tree.parent[0] = tree.parent[1] = static_cast<long>(n_leaves);
  for (std::size_t k = 2; k < n_leaves; ++k) {
    const long x = present[rng.UniformInt(0, static_cast<std::int64_t>(present.size()) - 1)];
    const long w = static_cast<long>(n_leaves + k - 1);
    tree.parent[w] = tree.parent[x];
    tree.parent[x] = w;
    tree.parent[k] = w;
    present.push_back(static_cast<long>(k));
    present.push_back(w);
  }

  std::vector<std::vector<long>> children(total);
  long root = -1;
  for (std::size_t v = 0; v < total; ++v) {
    if (tree.parent[v] == -1) {
      root = static_cast<long>(v);
    } else {
      children[tree.parent[v]].push_back(static_cast<long>(v));
    }
  }
  std::vector<Rational> below;
  for (std::size_t i = 0; i + 2 < n_leaves; ++i) {
    Rational u = rng.UniformRational();
    while (u == 0) u = rng.UniformRational();
    below.push_back(u * height);
  }
  std::sort(below.begin(), below.end(), std::greater<>());
  std::deque<long> queue{root};
  std::size_t next = 0;
  while (!queue.empty()) {
    const long v = queue.front();
    queue.pop_front();
    if (static_cast<std::size_t>(v) < n_leaves) continue;
    tree.height[v] = v == root ? height : below[next++];
    for (long c : children[v]) queue.push_back(c);
  }
  return tree;
}

UltrametricVector SampleUltrametricTree(std::size_t n_leaves, const Rational& height,
                                        RngStream& rng) {
  return Cophenetic(SampleRootedTree(n_leaves, height, rng));
}

UltrametricVector PerturbTree(const UltrametricVector& u, const Rational& eps, RngStream& rng) {
  if (eps < 0 || eps >= 1) throw DomainError("perturbation eps must lie in [0, 1)");
  if (u.n_leaves < 2 || !u.SatisfiesThreePointCondition()) {
    throw DomainError("input is not an ultrametric vector");
  }
  const std::size_t n = u.n_leaves;
  const std::size_t total = 2 * n - 1;

  // Agglomerative merging recovers the hierarchy; merge heights come out
  // nondecreasing.
  std::vector<long> cluster_of(n);
  for (std::size_t i = 0; i < n; ++i) cluster_of[i] = static_cast<long>(i);
  std::vector<long> parent(total, -1);
  std::vector<Rational> merge_height;
  std::vector<long> active(cluster_of);
  std::vector<std::vector<std::size_t>> members(total);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = 0, bj = 1;
    Rational best = u.at(members[active[0]][0], members[active[1]][0]);
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const Rational& d = u.at(members[active[i]][0], members[active[j]][0]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    const long w = static_cast<long>(n + step);
    parent[active[bi]] = parent[active[bj]] = w;
    members[w] = members[active[bi]];
    members[w].insert(members[w].end(), members[active[bj]].begin(), members[active[bj]].end());
    merge_height.push_back(best / 2);
    active.erase(active.begin() + static_cast<long>(bj));
    active[bi] = w;
  }

  std::vector<Rational> perturbed;
  perturbed.reserve(merge_height.size());
  for (const auto& h : merge_height) {
    perturbed.push_back(h * (1 + eps * (2 * rng.UniformRational() - 1)));
  }
  std::sort(perturbed.begin(), perturbed.end());
  RootedTree tree{n, parent, std::vector<Rational>(total)};
  for (std::size_t k = 0; k < perturbed.size(); ++k) tree.height[n + k] = perturbed[k];
  return Cophenetic(tree);
}

}  // namespace tropicurv
