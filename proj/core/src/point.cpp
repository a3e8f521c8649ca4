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

#include "tropicurv/point.hpp"

#include <algorithm>

namespace tropicurv {

ProjectivePoint ProjectivePoint::Canonicalize(std::span<const Rational> raw) {
  if (raw.size() < 2) {
    throw DimensionError("a projective point needs at least 2 coordinates, got " +
                         std::to_string(raw.size()));
  }
  std::vector<Rational> coords(raw.begin(), raw.end());
  const Rational shift = coords[0];
  for (auto& c : coords) c -= shift;
  return ProjectivePoint(std::move(coords));
}

ProjectivePoint ProjectivePoint::FromReduced(std::span<const Rational> reduced) {
  if (reduced.empty()) throw DimensionError("a reduced point needs at least 1 coordinate");
  std::vector<Rational> coords;
  coords.reserve(reduced.size() + 1);
  coords.emplace_back(0);
  coords.insert(coords.end(), reduced.begin(), reduced.end());
  return ProjectivePoint(std::move(coords));
}

std::vector<Rational> ProjectivePoint::reduced() const {
  return {coords_.begin() + 1, coords_.end()};
}

ProjectivePoint Canonicalize(std::span<const Rational> raw) {
  return ProjectivePoint::Canonicalize(raw);
}

Rational TropDistance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dim() != q.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                         std::to_string(q.dim()));
  }
  Rational hi = p[0] - q[0];
  Rational lo = hi;
  for (std::size_t i = 1; i < p.dim(); ++i) {
    Rational d = p[i] - q[i];
    if (d > hi) hi = d;
    if (d < lo) lo = d;
  }
  return hi - lo;
}

Rational TropNorm(std::span<const Rational> v) {
  if (v.empty()) throw DimensionError("norm of an empty vector");
  // Equivalent to max(v ∪ {0}) - min(v ∪ {0}).
  Rational hi = 0;
  Rational lo = 0;
  for (const auto& x : v) {
    if (x > hi) hi = x;
    if (x < lo) lo = x;
  }
  return hi - lo;
}

ProjectivePoint Scale(const ProjectivePoint& p, const Rational& factor) {
  std::vector<Rational> raw = p.coords();
  for (auto& c : raw) c *= factor;
  return ProjectivePoint::Canonicalize(raw);
}

ProjectivePoint PermuteCoordinates(const ProjectivePoint& p, std::span<const std::size_t> perm) {
  if (perm.size() != p.dim()) throw DimensionError("permutation size does not match dimension");
  std::vector<Rational> raw(p.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) raw[i] = p[perm[i]];
  return ProjectivePoint::Canonicalize(raw);
}

std::string ToString(const ProjectivePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ", ";
    out += ToString(p[i]);
  }
  return out + ")";
}

}  // namespace tropicurv
