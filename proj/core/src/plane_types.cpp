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

#include "tropicurv/plane_types.hpp"

#include <algorithm>
#include <optional>

namespace tropicurv {
namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

std::uint8_t PermuteMask(std::uint8_t mask, const std::array<int, 3>& perm) {
  std::uint8_t out = 0;
  for (int i = 0; i < 3; ++i) {
    if (mask & (1u << i)) out |= static_cast<std::uint8_t>(1u << perm[i]);
  }
  return out;
}

std::uint16_t PermuteCode(std::uint16_t code, const std::array<int, 3>& coord_perm,
                          const std::array<int, 3>& vertex_perm) {
  const TypeCellLabel in = TypeCellLabel::FromCode(code);
  TypeCellLabel out;
  for (int j = 0; j < 3; ++j) out.sets[vertex_perm[j]] = PermuteMask(in.sets[j], coord_perm);
  return out.code();
}

ProjectivePoint Plane(int x1, int x2) {
  const std::array<Rational, 2> r{Rational(x1), Rational(x2)};
  return ProjectivePoint::FromReduced(r);
}

struct References {
  std::array<std::vector<std::uint16_t>, 5> invariants;
  // All 36 symmetric images of each reference label set, for the
  // refinement test on non-generic inputs.
  std::array<std::vector<TypeComplex>, 5> images;
};

const References& GetReferences() {
  static const References refs = [] {
    References r;
    for (int t = 0; t < 5; ++t) {
      const auto ex = TypeReference(static_cast<TriangleType>(t));
      const TypeComplex tc = TypeCells(ex[0], ex[1], ex[2]);
      r.invariants[t] = CanonicalInvariant(tc);
      for (const auto& cp : kPerms) {
        for (const auto& vp : kPerms) r.images[t].push_back(ApplySymmetry(tc, cp, vp));
      }
    }
    return r;
  }();
  return refs;
}

}  // namespace

bool TypeComplex::contains(const TypeCellLabel& l) const {
  return std::binary_search(labels.begin(), labels.end(), l.code());
}

TypeComplex TypeCells(const ProjectivePoint& a, const ProjectivePoint& b,
                      const ProjectivePoint& c) {
  if (a.dim() != 3 || b.dim() != 3 || c.dim() != 3) {
    throw DimensionError("type cells are defined for plane triangles (dim 3)");
  }
  if (a == b || a == c || b == c) throw DegenerateError("triangle has coincident vertices");
  const std::array<const ProjectivePoint*, 3> v{&a, &b, &c};

  // diff[j][i][k] = v^(j)_i - v^(j)_k
  std::array<std::array<std::array<Rational, 3>, 3>, 3> diff;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) diff[j][i][k] = (*v[j])[i] - (*v[j])[k];
    }
  }

  TypeComplex tc;
  for (std::uint16_t code = 0; code < 512; ++code) {
    const TypeCellLabel label = TypeCellLabel::FromCode(code);
    if (!label.sets[0] || !label.sets[1] || !label.sets[2]) continue;
    // x_i - x_k <= bound[i][k], unset means unconstrained.
    std::array<std::array<std::optional<Rational>, 3>, 3> bound;
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) {
        if (!(label.sets[j] & (1u << i))) continue;
        for (int k = 0; k < 3; ++k) {
          if (k == i) continue;
          auto& slot = bound[i][k];
          if (!slot || diff[j][i][k] < *slot) slot = diff[j][i][k];
        }
      }
    }
    // A system of difference constraints on three variables is feasible
    // iff no 2-cycle or 3-cycle of bounds has negative total weight.
    bool feasible = true;
    for (int i = 0; i < 3 && feasible; ++i) {
      for (int k = i + 1; k < 3 && feasible; ++k) {
        if (bound[i][k] && bound[k][i] && *bound[i][k] + *bound[k][i] < 0) feasible = false;
      }
    }
    if (feasible && bound[0][1] && bound[1][2] && bound[2][0] &&
        *bound[0][1] + *bound[1][2] + *bound[2][0] < 0) {
      feasible = false;
    }
    if (feasible && bound[0][2] && bound[2][1] && bound[1][0] &&
        *bound[0][2] + *bound[2][1] + *bound[1][0] < 0) {
      feasible = false;
    }
    if (feasible) tc.labels.push_back(code);
  }
  return tc;
}

TypeComplex ApplySymmetry(const TypeComplex& tc, const std::array<int, 3>& coord_perm,
                          const std::array<int, 3>& vertex_perm) {
  TypeComplex out;
  out.labels.reserve(tc.labels.size());
  for (auto code : tc.labels) out.labels.push_back(PermuteCode(code, coord_perm, vertex_perm));
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

std::vector<std::uint16_t> CanonicalInvariant(const TypeComplex& tc) {
  std::vector<std::uint16_t> best;
  for (const auto& cp : kPerms) {
    for (const auto& vp : kPerms) {
      TypeComplex image = ApplySymmetry(tc, cp, vp);
      if (best.empty() || image.labels < best) best = std::move(image.labels);
    }
  }
  return best;
}

std::string ToString(TriangleType t) { return "T" + std::to_string(static_cast<int>(t) + 1); }

std::vector<TriangleType> TriangleTypeSet::members() const {
  std::vector<TriangleType> out;
  for (int t = 0; t < 5; ++t) {
    if (bits & (1u << t)) out.push_back(static_cast<TriangleType>(t));
  }
  return out;
}

std::string TriangleTypeSet::str() const {
  std::string out = "{";
  for (auto t : members()) {
    if (out.size() > 1) out += ",";
    out += ToString(t);
  }
  return out + "}";
}

std::array<ProjectivePoint, 3> TypeExemplar(TriangleType t) {
  switch (t) {
    case TriangleType::kT1:
      return {Plane(0, 0), Plane(2, 4), Plane(5, 1)};
    case TriangleType::kT2:
      return {Plane(0, 0), Plane(3, 2), Plane(4, 1)};
    case TriangleType::kT3:
      return {Plane(0, 0), Plane(2, 1), Plane(5, 3)};
    case TriangleType::kT4:
      return {Plane(3, 4), Plane(6, 3), Plane(9, 5)};
    case TriangleType::kT5:
      return {Plane(0, 4), Plane(3, 0), Plane(5, 6)};
  }
  throw DomainError("unknown triangle type");
}

std::array<ProjectivePoint, 3> TypeReference(TriangleType t) {
  // The T5 exemplar sits on a wall between chambers; (5,7) moves it inside.
  if (t == TriangleType::kT5) return {Plane(0, 4), Plane(3, 0), Plane(5, 7)};
  return TypeExemplar(t);
}

TriangleTypeSet ClassifyType(const ProjectivePoint& a, const ProjectivePoint& b,
                             const ProjectivePoint& c) {
  const TypeComplex tc = TypeCells(a, b, c);
  const auto& refs = GetReferences();
  const auto inv = CanonicalInvariant(tc);

  TriangleTypeSet result;
  for (int t = 0; t < 5; ++t) {
    if (refs.invariants[t] == inv) {
      result.insert(static_cast<TriangleType>(t));
      result.generic = true;
      return result;
    }
  }
  for (int t = 0; t < 5; ++t) {
    for (const auto& image : refs.images[t]) {
      if (std::includes(tc.labels.begin(), tc.labels.end(), image.labels.begin(),
                        image.labels.end())) {
        result.insert(static_cast<TriangleType>(t));
        break;
      }
    }
  }
  return result;
}

}  // namespace tropicurv
