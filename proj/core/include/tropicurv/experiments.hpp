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

#ifndef TROPICURV_EXPERIMENTS_HPP_
#define TROPICURV_EXPERIMENTS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tropicurv/samplers.hpp"

namespace tropicurv {

// "kind:key=value,key=value", e.g. "simplex:n=3" or
// "trees:leaves=4,count=480,eps=0.05".
struct SamplerSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  // Canonical text: keys in sorted order.
  std::string str() const;
};

// Throws ParseError on malformed text.
SamplerSpec ParseSamplerSpec(std::string_view text);

// A seeded source of triangles. Batches are reproducible: the same
// (seed, batch, count) always returns the same triangles.
//
// Kinds and parameters (defaults in brackets):
//   simplex    n [3], reading [joint]
//   grid       lo [0], hi [10]
//   hitrun     system [T3-ineq], burn_in [1000], thinning [10]
//   reject     type [T1], max_tries [100000], reading [joint]
//   fatfamily  n [3]
//   trees      leaves [4], count [480], eps [1/20], height [1],
//              bases [count]
class TriangleSource {
 public:
  struct Batch {
    std::vector<Triangle> triangles;
    // Draws discarded on the way (rejection sampling only).
    std::uint64_t rejected = 0;
  };

  // Throws ConfigError on unknown kinds, keys or values.
  static std::unique_ptr<TriangleSource> Create(const SamplerSpec& spec);

  virtual ~TriangleSource() = default;
  virtual Batch Draw(std::uint64_t seed, std::uint64_t batch, std::size_t count) const = 0;

  // Ambient dimension of the vertices.
  virtual std::size_t dim() const = 0;
  const SamplerSpec& spec() const { return spec_; }

 protected:
  explicit TriangleSource(SamplerSpec spec) : spec_(std::move(spec)) {}

 private:
  SamplerSpec spec_;
};

// A per-purpose seed derived from the master seed and a text tag.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view tag);

struct ProportionRow {
  std::string group;
  std::string category;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  // Standard deviation of the per-run percentage; 0 for one run.
  double sd_percent = 0;

  double percent() const { return total == 0 ? 0.0 : 100.0 * count / total; }
};

struct ProportionTable {
  std::string experiment;
  std::vector<ProportionRow> rows;

  // Rows of one group, in table order.
  std::vector<ProportionRow> Group(std::string_view group) const;
  // Percentage of (group, category); 0 when absent.
  double Percent(std::string_view group, std::string_view category) const;
  std::uint64_t Count(std::string_view group, std::string_view category) const;

  // Header experiment,group,category,count,total,fraction,percent,sd_percent.
  std::string ToCsv() const;
  std::string ToJson() const;
};

struct ExperimentConfig {
  // table1 .. table5 or custom.
  std::string id = "table4";
  std::size_t trials = 1000;
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  // table4: a single n, 0 for all of 3..8. custom: overrides the sampler's n.
  std::size_t dim = 0;
  // Required for custom; overrides the default sampler of table2..table5.
  std::string sampler;
  // Reading used by the simplex-based tables.
  SimplexReading reading = SimplexReading::kJoint;
  // Worker threads; results do not depend on this.
  std::size_t threads = 1;
};

// Throws ConfigError on invalid configurations.
ProportionTable RunExperiment(const ExperimentConfig& cfg);

}  // namespace tropicurv

#endif  // TROPICURV_EXPERIMENTS_HPP_
