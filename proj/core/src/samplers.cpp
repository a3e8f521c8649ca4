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

#include "tropicurv/samplers.hpp"

#include <algorithm>

#include "tropicurv/segment.hpp"

namespace tropicurv {
namespace {

Triangle FromFlat(const std::vector<Rational>& flat, std::size_t per_vertex) {
  auto vertex = [&](std::size_t k) {
    std::span<const Rational> s(flat.data() + k * per_vertex, per_vertex);
    return ProjectivePoint::FromReduced(s);
  };
  return {vertex(0), vertex(1), vertex(2)};
}

bool OnSegment(const ProjectivePoint& v, const ProjectivePoint& p, const ProjectivePoint& q) {
  const Rational dp = TropDistance(p, v);
  if (dp + TropDistance(v, q) != TropDistance(p, q)) return false;
  return TropicalSegment(p, q).At(dp) == v;
}

// Row of G for sum_k coef_k x_{idx_k} <= 0.
RationalVector Row(std::initializer_list<std::pair<int, int>> terms) {
  RationalVector row(6, Rational(0));
  for (auto [idx, coef] : terms) row[idx] += coef;
  return row;
}

enum : int { kA1 = 0, kA2, kB1, kB2, kC1, kC2 };

// Each constraint is lhs < rhs written as lhs - rhs < 0.
std::vector<RationalVector> SystemRows(InequalitySystem system) {
  auto lt = [](int x, int y) { return Row({{x, 1}, {y, -1}}); };
  // (x1 - x2) < (y1 - y2)
  auto diff_lt = [](int x1, int x2, int y1, int y2) {
    return Row({{x1, 1}, {x2, -1}, {y1, -1}, {y2, 1}});
  };
  std::vector<RationalVector> rows{lt(kA1, kB1), lt(kB1, kC1)};
  switch (system) {
    case InequalitySystem::kT1:
      rows.push_back(lt(kA2, kB2));
      rows.push_back(lt(kB2, kC2));
      rows.push_back(diff_lt(kB1, kB2, kA1, kA2));
      rows.push_back(diff_lt(kA1, kA2, kC1, kC2));
      break;
    case InequalitySystem::kT2:
      rows.push_back(lt(kA2, kC2));
      rows.push_back(lt(kC2, kB2));
      rows.push_back(diff_lt(kA1, kA2, kB1, kB2));
      break;
    case InequalitySystem::kT3:
      rows.push_back(lt(kA2, kB2));
      rows.push_back(lt(kB2, kC2));
      rows.push_back(diff_lt(kA1, kA2, kB1, kB2));
      rows.push_back(diff_lt(kB1, kB2, kC1, kC2));
      break;
    case InequalitySystem::kT3Printed:
      rows.push_back(lt(kA2, kB2));
      rows.push_back(lt(kB2, kC2));
      rows.push_back(diff_lt(kC1, kC2, kB1, kB2));
      break;
    case InequalitySystem::kT4:
      rows.push_back(lt(kB2, kA2));
      rows.push_back(lt(kA2, kC2));
      rows.push_back(diff_lt(kA1, kA2, kC1, kC2));
      rows.push_back(diff_lt(kB1, kB2, kC1, kC2));
      break;
    case InequalitySystem::kT5:
      rows.push_back(lt(kB2, kA2));
      rows.push_back(lt(kA2, kC2));
      rows.push_back(diff_lt(kA1, kA2, kC1, kC2));
      rows.push_back(diff_lt(kC1, kC2, kB1, kB2));
      break;
  }
  return rows;
}

// Distinct values of (0, 1), sorted in decreasing order.
std::vector<Rational> DecreasingPositives(std::size_t count, RngStream& rng) {
  std::vector<Rational> v;
  while (v.size() < count) {
    Rational u = rng.UniformRational();
    if (u == 0 || std::find(v.begin(), v.end(), u) != v.end()) continue;
    v.push_back(std::move(u));
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

std::string_view ToString(SimplexReading reading) {
  switch (reading) {
    case SimplexReading::kJoint:
      return "joint";
    case SimplexReading::kVertex:
      return "vertex";
    case SimplexReading::kCube:
      return "cube";
  }
  return "?";
}

SimplexReading ParseSimplexReading(std::string_view text) {
  for (auto r : {SimplexReading::kJoint, SimplexReading::kVertex, SimplexReading::kCube}) {
    if (text == ToString(r)) return r;
  }
  throw ConfigError("unknown simplex reading '" + std::string(text) +
                    "' (expected joint, vertex or cube)");
}

std::vector<Rational> SampleProbabilitySimplex(std::size_t m, RngStream& rng) {
  if (m == 0) throw DomainError("simplex needs at least one coordinate");
  std::vector<Rational> cuts;
  cuts.reserve(m + 1);
  cuts.emplace_back(0);
  for (std::size_t i = 0; i + 1 < m; ++i) cuts.push_back(rng.UniformRational());
  cuts.emplace_back(1);
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  std::vector<Rational> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = cuts[i + 1] - cuts[i];
  return out;
}

ProjectivePoint SampleSimplexVertex(std::size_t n, RngStream& rng) {
  if (n < 3) throw DomainError("simplex vertices need n >= 3");
  return ProjectivePoint::Canonicalize(SampleProbabilitySimplex(n, rng));
}

bool IsDegenerateTriangle(const Triangle& t) {
  const auto& [a, b, c] = t;
  if (a == b || a == c || b == c) return true;
  return OnSegment(a, b, c) || OnSegment(b, a, c) || OnSegment(c, a, b);
}

Triangle SampleSimplexTriangle(std::size_t n, SimplexReading reading, RngStream& rng) {
  if (n < 3) throw DomainError("simplex triangles need n >= 3");
  while (true) {
    Triangle t;
    switch (reading) {
      case SimplexReading::kJoint:
        t = FromFlat(SampleProbabilitySimplex(3 * (n - 1), rng), n - 1);
        break;
      case SimplexReading::kVertex:
        t = {SampleSimplexVertex(n, rng), SampleSimplexVertex(n, rng),
             SampleSimplexVertex(n, rng)};
        break;
      case SimplexReading::kCube: {
        std::vector<Rational> flat(3 * (n - 1));
        for (auto& x : flat) x = rng.UniformRational();
        t = FromFlat(flat, n - 1);
        break;
      }
    }
    if (!IsDegenerateTriangle(t)) return t;
  }
}

Triangle SampleIntegerTriangle(std::int64_t lo, std::int64_t hi, RngStream& rng) {
  if (!(lo < hi)) throw DomainError("integer grid needs lo < hi");
  while (true) {
    std::vector<Rational> flat(6);
    for (auto& x : flat) x = Rational(rng.UniformInt(lo, hi));
    Triangle t = FromFlat(flat, 2);
    if (!(t[0] == t[1] || t[0] == t[2] || t[1] == t[2])) return t;
  }
}

std::string_view ToString(InequalitySystem system) {
  switch (system) {
    case InequalitySystem::kT1:
      return "T1-ineq";
    case InequalitySystem::kT2:
      return "T2-ineq";
    case InequalitySystem::kT3:
      return "T3-ineq";
    case InequalitySystem::kT3Printed:
      return "T3-printed";
    case InequalitySystem::kT4:
      return "T4-ineq";
    case InequalitySystem::kT5:
      return "T5-ineq";
  }
  return "?";
}

InequalitySystem ParseInequalitySystem(std::string_view text) {
  for (auto s : {InequalitySystem::kT1, InequalitySystem::kT2, InequalitySystem::kT3,
                 InequalitySystem::kT3Printed, InequalitySystem::kT4, InequalitySystem::kT5}) {
    if (text == ToString(s)) return s;
  }
  throw ConfigError("unknown inequality system '" + std::string(text) + "'");
}

bool SatisfiesSystem(InequalitySystem system, const std::array<Rational, 6>& x) {
  for (const auto& row : SystemRows(system)) {
    Rational s = 0;
    for (int i = 0; i < 6; ++i) s += row[i] * x[i];
    if (s >= 0) return false;
  }
  return true;
}

Polytope RegionForSystem(InequalitySystem system) {
  Polytope p;
  p.G = SystemRows(system);
  p.h.assign(p.G.size(), Rational(0));
  for (int i = 0; i < 6; ++i) {
    RationalVector row(6, Rational(0));
    row[i] = -1;
    p.G.push_back(std::move(row));
    p.h.emplace_back(0);
  }
  p.E = {RationalVector(6, Rational(1))};
  p.e = {Rational(1)};
  return p;
}

Triangle TriangleFromPlaneCoords(const std::array<Rational, 6>& x) {
  return FromFlat(std::vector<Rational>(x.begin(), x.end()), 2);
}

std::array<Rational, 6> PlaneCoords(const Triangle& t) {
  for (const auto& v : t) {
    if (v.dim() != 3) throw DimensionError("plane coordinates need dim 3 points");
  }
  return {t[0][1], t[0][2], t[1][1], t[1][2], t[2][1], t[2][2]};
}

std::vector<Triangle> SampleRegion(InequalitySystem system, std::size_t count, RngStream& rng,
                                   const HitAndRunOptions& options) {
  const Polytope region = RegionForSystem(system);
  const auto points = HitAndRun(region, ChebyshevCenter(region), count, options, rng);
  std::vector<Triangle> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    out.push_back(TriangleFromPlaneCoords({x[0], x[1], x[2], x[3], x[4], x[5]}));
  }
  return out;
}

ConditionedSample SampleTypeConditioned(TriangleType type, RngStream& rng, std::size_t max_tries,
                                        SimplexReading reading) {
  TriangleTypeSet want;
  want.insert(type);
  for (std::size_t tries = 1; tries <= max_tries; ++tries) {
    Triangle t = SampleSimplexTriangle(3, reading, rng);
    if (ClassifyType(t[0], t[1], t[2]).bits == want.bits) return {std::move(t), tries};
  }
  throw DomainError("no " + ToString(type) + " triangle in " + std::to_string(max_tries) +
                    " draws (acceptance rate 0/" + std::to_string(max_tries) + ")");
}

Triangle SampleFatFamily(std::size_t n, RngStream& rng) {
  if (n < 3) throw DomainError("the fat family needs n >= 3");
  const auto ab = DecreasingPositives(n - 1, rng);
  const auto bc = DecreasingPositives(n - 1, rng);
  std::vector<Rational> a(n), b(n), c(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a[i] = rng.UniformRational();
    b[i] = a[i] + ab[i];
    c[i] = b[i] + bc[i];
  }
  const auto last = DecreasingPositives(2, rng);
  c[n - 1] = rng.UniformRational();
  b[n - 1] = c[n - 1] + last[1];
  a[n - 1] = b[n - 1] + last[0];
  return {ProjectivePoint::FromReduced(a), ProjectivePoint::FromReduced(b),
          ProjectivePoint::FromReduced(c)};
}

bool InFatFamily(const Triangle& t) {
  const std::size_t n = t[0].dim() - 1;
  if (n < 3 || t[1].dim() != n + 1 || t[2].dim() != n + 1) return false;
  // Short-hand coordinate i is ambient coordinate i + 1.
  auto a = [&](std::size_t i) { return t[0][i + 1]; };
  auto b = [&](std::size_t i) { return t[1][i + 1]; };
  auto c = [&](std::size_t i) { return t[2][i + 1]; };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(a(i) < b(i) && b(i) < c(i))) return false;
  }
  if (!(a(n - 1) > b(n - 1) && b(n - 1) > c(n - 1))) return false;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (!(b(i) - a(i) > b(i + 1) - a(i + 1))) return false;
    if (!(c(i) - b(i) > c(i + 1) - b(i + 1))) return false;
  }
  return true;
}

}  // namespace tropicurv
