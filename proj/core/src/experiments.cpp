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

#include "tropicurv/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>
#include "tropicurv/curvature.hpp"
#include "tropicurv/trees.hpp"

namespace tropicurv {
namespace {

constexpr std::array<CurvatureClass, 4> kClasses{CurvatureClass::kFlat, CurvatureClass::kPositive,
                                                 CurvatureClass::kNegative,
                                                 CurvatureClass::kUndefined};

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Params {
 public:
  Params(const SamplerSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [k, v] : spec.params) {
      if (!allowed.count(k)) {
        throw ConfigError("sampler '" + spec.kind + "' has no parameter '" + k + "'");
      }
    }
  }

  std::int64_t Int(const std::string& key, std::int64_t fallback) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    std::int64_t v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("parameter " + key + "=" + s + " is not an integer");
    }
    return v;
  }

  std::size_t Count(const std::string& key, std::size_t fallback, std::size_t min) const {
    const auto v = Int(key, static_cast<std::int64_t>(fallback));
    if (v < static_cast<std::int64_t>(min)) {
      throw ConfigError("parameter " + key + " must be at least " + std::to_string(min));
    }
    return static_cast<std::size_t>(v);
  }

  Rational Rat(const std::string& key, const Rational& fallback) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    try {
      return ParseRational(it->second);
    } catch (const ParseError&) {
      throw ConfigError("parameter " + key + "=" + it->second + " is not a number");
    }
  }

  std::string Str(const std::string& key, const std::string& fallback) const {
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

 private:
  const SamplerSpec& spec_;
};

struct Draw1 {
  Triangle triangle;
  std::uint64_t rejected = 0;
};

void ParallelFor(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Sources whose trials are independent draws; trial i of batch b uses the
// stream (seed, b * 2^32 + i).
class IidSource : public TriangleSource {
 public:
  using TriangleSource::TriangleSource;

  virtual Draw1 DrawOne(RngStream& rng) const = 0;

  Batch Draw(std::uint64_t seed, std::uint64_t batch, std::size_t count) const override {
    return DrawParallel(seed, batch, count, 1);
  }

  Batch DrawParallel(std::uint64_t seed, std::uint64_t batch, std::size_t count,
                     std::size_t threads) const {
    std::vector<Draw1> draws(count);
    ParallelFor(count, threads, [&](std::size_t i) {
      RngStream rng(seed, (batch << 32) + i);
      draws[i] = DrawOne(rng);
    });
    Batch out;
    out.triangles.reserve(count);
    for (auto& d : draws) {
      out.triangles.push_back(std::move(d.triangle));
      out.rejected += d.rejected;
    }
    return out;
  }
};

class SimplexSource : public IidSource {
 public:
  explicit SimplexSource(const SamplerSpec& spec) : IidSource(spec) {
    Params p(spec, {"n", "reading"});
    n_ = p.Count("n", 3, 3);
    reading_ = ParseSimplexReading(p.Str("reading", "joint"));
  }
  Draw1 DrawOne(RngStream& rng) const override {
    return {SampleSimplexTriangle(n_, reading_, rng)};
  }
  std::size_t dim() const override { return n_; }

 private:
  std::size_t n_;
  SimplexReading reading_;
};

class GridSource : public IidSource {
 public:
  explicit GridSource(const SamplerSpec& spec) : IidSource(spec) {
    Params p(spec, {"lo", "hi"});
    lo_ = p.Int("lo", 0);
    hi_ = p.Int("hi", 10);
    if (!(lo_ < hi_)) throw ConfigError("grid sampler needs lo < hi");
  }
  Draw1 DrawOne(RngStream& rng) const override { return {SampleIntegerTriangle(lo_, hi_, rng)}; }
  std::size_t dim() const override { return 3; }

 private:
  std::int64_t lo_, hi_;
};

class RejectSource : public IidSource {
 public:
  explicit RejectSource(const SamplerSpec& spec) : IidSource(spec) {
    Params p(spec, {"type", "max_tries", "reading"});
    const std::string t = p.Str("type", "T1");
    bool found = false;
    for (int k = 0; k < 5; ++k) {
      if (t == ToString(static_cast<TriangleType>(k))) {
        type_ = static_cast<TriangleType>(k);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown triangle type '" + t + "'");
    max_tries_ = p.Count("max_tries", 100000, 1);
    reading_ = ParseSimplexReading(p.Str("reading", "joint"));
  }
  Draw1 DrawOne(RngStream& rng) const override {
    auto s = SampleTypeConditioned(type_, rng, max_tries_, reading_);
    return {std::move(s.triangle), s.tries - 1};
  }
  std::size_t dim() const override { return 3; }

 private:
  TriangleType type_ = TriangleType::kT1;
  std::size_t max_tries_;
  SimplexReading reading_;
};

class FatFamilySource : public IidSource {
 public:
  explicit FatFamilySource(const SamplerSpec& spec) : IidSource(spec) {
    Params p(spec, {"n"});
    n_ = p.Count("n", 3, 3);
  }
  Draw1 DrawOne(RngStream& rng) const override { return {SampleFatFamily(n_, rng)}; }
  std::size_t dim() const override { return n_ + 1; }

 private:
  std::size_t n_;
};

// Builds the tree set once per batch; triples are cheap, so draws stay serial.
class TreeSource : public TriangleSource {
 public:
  explicit TreeSource(const SamplerSpec& spec) : TriangleSource(spec) {
    Params p(spec, {"leaves", "count", "eps", "height", "bases"});
    leaves_ = p.Count("leaves", 4, 3);
    count_ = p.Count("count", 480, 3);
    eps_ = p.Rat("eps", Rational(1, 20));
    height_ = p.Rat("height", Rational(1));
    bases_ = p.Count("bases", count_, 1);
    if (eps_ < 0 || eps_ >= 1) throw ConfigError("trees: eps must lie in [0, 1)");
    if (height_ <= 0) throw ConfigError("trees: height must be positive");
    if (bases_ > count_) throw ConfigError("trees: bases cannot exceed count");
  }

  // Tree i is a perturbation of base tree i mod bases.
  std::vector<ProjectivePoint> TreeSet(std::uint64_t seed) const {
    RngStream rng(DeriveSeed(seed, "tree-set"), 0);
    std::vector<UltrametricVector> bases;
    for (std::size_t k = 0; k < bases_; ++k) {
      bases.push_back(SampleUltrametricTree(leaves_, height_, rng));
    }
    std::vector<ProjectivePoint> out;
    for (std::size_t i = 0; i < count_; ++i) {
      out.push_back(PerturbTree(bases[i % bases_], eps_, rng).ToPoint());
    }
    return out;
  }

  Batch Draw(std::uint64_t seed, std::uint64_t batch, std::size_t count) const override {
    const auto set = TreeSet(seed);
    Batch out;
    for (std::size_t i = 0; i < count; ++i) {
      RngStream rng(seed, (batch << 32) + i);
      out.triangles.push_back(Triple(set, rng));
    }
    return out;
  }

  std::size_t dim() const override { return leaves_ * (leaves_ - 1) / 2; }

 private:
  Triangle Triple(const std::vector<ProjectivePoint>& set, RngStream& rng) const {
    const auto last = static_cast<std::int64_t>(set.size()) - 1;
    while (true) {
      const auto i = rng.UniformInt(0, last);
      const auto j = rng.UniformInt(0, last);
      const auto k = rng.UniformInt(0, last);
      const Triangle t{set[i], set[j], set[k]};
      if (!(t[0] == t[1] || t[0] == t[2] || t[1] == t[2])) return t;
    }
  }

  std::size_t leaves_, count_, bases_;
  Rational eps_, height_;
};

class HitRunSource : public TriangleSource {
 public:
  explicit HitRunSource(const SamplerSpec& spec) : TriangleSource(spec) {
    Params p(spec, {"system", "burn_in", "thinning"});
    system_ = ParseInequalitySystem(p.Str("system", "T3-ineq"));
    options_.burn_in = p.Count("burn_in", 1000, 0);
    options_.thinning = p.Count("thinning", 10, 1);
  }
  // One chain per batch.
  Batch Draw(std::uint64_t seed, std::uint64_t batch, std::size_t count) const override {
    RngStream rng(seed, batch);
    return {SampleRegion(system_, count, rng, options_), 0};
  }
  std::size_t dim() const override { return 3; }

 private:
  InequalitySystem system_;
  HitAndRunOptions options_;
};

// ---- experiment engine ----

using Classifier = std::function<std::string(const Triangle&)>;

std::string CurvatureCategory(const Triangle& t) {
  return std::string(ToString(CurvatureOf(t[0], t[1], t[2])));
}

std::string TypeCategory(const Triangle& t) {
  const auto types = ClassifyType(t[0], t[1], t[2]);
  return types.is_singleton() ? ToString(types.members().front()) : "other";
}

std::vector<std::string> CurvatureCategories() {
  std::vector<std::string> out;
  for (auto c : kClasses) out.emplace_back(ToString(c));
  return out;
}

std::vector<std::string> TypeCategories() { return {"T1", "T2", "T3", "T4", "T5", "other"}; }

struct Tally {
  std::vector<std::string> categories;
  // counts[run][category]
  std::vector<std::map<std::string, std::uint64_t>> counts;

  void Add(std::size_t run, const std::string& category) {
    if (counts.size() <= run) counts.resize(run + 1);
    if (std::find(categories.begin(), categories.end(), category) == categories.end()) {
      categories.push_back(category);
    }
    ++counts[run][category];
  }

  void AppendTo(const std::string& group, std::size_t runs, ProportionTable& table) const {
    std::vector<std::uint64_t> totals(runs, 0);
    for (std::size_t r = 0; r < runs && r < counts.size(); ++r) {
      for (const auto& [c, n] : counts[r]) totals[r] += n;
    }
    std::uint64_t total = 0;
    for (auto t : totals) total += t;
    for (const auto& c : categories) {
      ProportionRow row{group, c, 0, total, 0};
      std::vector<double> pct;
      for (std::size_t r = 0; r < runs; ++r) {
        std::uint64_t n = 0;
        if (r < counts.size()) {
          auto it = counts[r].find(c);
          if (it != counts[r].end()) n = it->second;
        }
        row.count += n;
        pct.push_back(totals[r] ? 100.0 * n / totals[r] : 0.0);
      }
      if (runs > 1) {
        double mean = 0;
        for (double p : pct) mean += p;
        mean /= runs;
        double ss = 0;
        for (double p : pct) ss += (p - mean) * (p - mean);
        row.sd_percent = std::sqrt(ss / (runs - 1));
      }
      table.rows.push_back(std::move(row));
    }
  }
};

struct GroupPlan {
  std::string group;
  std::vector<std::string> categories;
  Classifier classify;
  // Only triangles whose `filter` category matches are counted; empty
  // means all.
  std::function<bool(const Triangle&, const std::vector<std::string>&)> filter;
};

// Draws runs x trials triangles from `source` and tallies each plan.
// Classifications of one triangle are computed once per distinct
// classifier index and shared by the plans through `labels`.
void RunSource(const TriangleSource& source, const ExperimentConfig& cfg,
               const std::vector<Classifier>& classifiers,
               const std::function<void(std::size_t run, const std::vector<std::string>& labels)>&
                   record,
               std::uint64_t* rejected_total) {
  const std::uint64_t seed = DeriveSeed(cfg.seed, source.spec().str());
  const auto* iid = dynamic_cast<const IidSource*>(&source);
  for (std::size_t run = 0; run < cfg.runs; ++run) {
    TriangleSource::Batch batch = iid ? iid->DrawParallel(seed, run, cfg.trials, cfg.threads)
                                      : source.Draw(seed, run, cfg.trials);
    if (rejected_total) *rejected_total += batch.rejected;
    std::vector<std::vector<std::string>> labels(batch.triangles.size());
    ParallelFor(batch.triangles.size(), cfg.threads, [&](std::size_t i) {
      for (const auto& c : classifiers) labels[i].push_back(c(batch.triangles[i]));
    });
    for (const auto& l : labels) record(run, l);
  }
}

void CurvatureGroup(const std::string& group, const std::string& spec_text,
                    const ExperimentConfig& cfg, ProportionTable& table) {
  const auto source = TriangleSource::Create(ParseSamplerSpec(spec_text));
  Tally tally{CurvatureCategories(), {}};
  RunSource(*source, cfg, {CurvatureCategory},
            [&](std::size_t run, const std::vector<std::string>& l) { tally.Add(run, l[0]); },
            nullptr);
  tally.AppendTo(group, cfg.runs, table);
}

std::string WithReading(const std::string& spec_text, const ExperimentConfig& cfg) {
  return spec_text + ",reading=" + std::string(ToString(cfg.reading));
}

ProportionTable Table1(const ExperimentConfig& cfg) {
  ProportionTable table{"table1", {}};
  for (const char* type : {"T1", "T5"}) {
    const std::string spec = WithReading(std::string("reject:type=") + type, cfg);
    const auto source = TriangleSource::Create(ParseSamplerSpec(spec));
    Tally tally{CurvatureCategories(), {}};
    std::uint64_t rejected = 0;
    RunSource(*source, cfg, {CurvatureCategory},
              [&](std::size_t run, const std::vector<std::string>& l) { tally.Add(run, l[0]); },
              &rejected);
    const std::string group = std::string("reject ") + type;
    tally.AppendTo(group, cfg.runs, table);
    const std::uint64_t accepted = cfg.runs * cfg.trials;
    table.rows.push_back({group + " draws", "accepted", accepted, accepted + rejected, 0});
    table.rows.push_back({group + " draws", "rejected", rejected, accepted + rejected, 0});
  }
  for (const char* system : {"T1-ineq", "T5-ineq"}) {
    const auto source =
        TriangleSource::Create(ParseSamplerSpec(std::string("hitrun:system=") + system));
    Tally curv{CurvatureCategories(), {}};
    Tally types{TypeCategories(), {}};
    RunSource(*source, cfg, {CurvatureCategory, TypeCategory},
              [&](std::size_t run, const std::vector<std::string>& l) {
                curv.Add(run, l[0]);
                types.Add(run, l[1]);
              },
              nullptr);
    const std::string group = std::string("region ") + system;
    curv.AppendTo(group, cfg.runs, table);
    types.AppendTo(group + " types", cfg.runs, table);
  }
  return table;
}

ProportionTable Table3(const ExperimentConfig& cfg) {
  ProportionTable table{"table3", {}};
  const std::string spec =
      cfg.sampler.empty() ? WithReading("simplex:n=3", cfg) : cfg.sampler;
  const auto source = TriangleSource::Create(ParseSamplerSpec(spec));
  if (source->dim() != 3) throw ConfigError("table3 needs a plane sampler");
  Tally types{TypeCategories(), {}};
  std::map<std::string, Tally> by_type;
  for (const auto& t : TypeCategories()) by_type[t] = Tally{CurvatureCategories(), {}};
  RunSource(*source, cfg, {TypeCategory, CurvatureCategory},
            [&](std::size_t run, const std::vector<std::string>& l) {
              types.Add(run, l[0]);
              by_type[l[0]].Add(run, l[1]);
            },
            nullptr);
  types.AppendTo("types", cfg.runs, table);
  for (const auto& t : TypeCategories()) by_type[t].AppendTo("curvature " + t, cfg.runs, table);
  return table;
}

ProportionTable Table4(const ExperimentConfig& cfg) {
  ProportionTable table{"table4", {}};
  std::vector<std::size_t> dims;
  if (cfg.dim == 0) {
    for (std::size_t n = 3; n <= 8; ++n) dims.push_back(n);
  } else if (cfg.dim < 3) {
    throw ConfigError("table4 needs dim >= 3");
  } else {
    dims.push_back(cfg.dim);
  }
  for (auto n : dims) {
    CurvatureGroup("n=" + std::to_string(n),
                   WithReading("simplex:n=" + std::to_string(n), cfg), cfg, table);
  }
  return table;
}

ProportionTable Custom(const ExperimentConfig& cfg) {
  if (cfg.sampler.empty()) throw ConfigError("custom experiments need a sampler");
  SamplerSpec spec = ParseSamplerSpec(cfg.sampler);
  if (cfg.dim != 0) {
    if (spec.kind != "simplex" && spec.kind != "fatfamily") {
      throw ConfigError("dim applies only to simplex and fatfamily samplers");
    }
    spec.params["n"] = std::to_string(cfg.dim);
  }
  ProportionTable table{"custom", {}};
  CurvatureGroup(spec.str(), spec.str(), cfg, table);
  return table;
}

}  // namespace

std::string SamplerSpec::str() const {
  std::string out = kind;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

SamplerSpec ParseSamplerSpec(std::string_view text) {
  SamplerSpec spec;
  const auto colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  if (spec.kind.empty()) throw ParseError("sampler spec has no kind: '" + std::string(text) + "'");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError("sampler parameter '" + std::string(item) + "' is not key=value");
    }
    const std::string key(item.substr(0, eq));
    if (!spec.params.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw ParseError("sampler parameter '" + key + "' given twice");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw ParseError("trailing comma in sampler spec");
  }
  return spec;
}

std::unique_ptr<TriangleSource> TriangleSource::Create(const SamplerSpec& spec) {
  if (spec.kind == "simplex") return std::make_unique<SimplexSource>(spec);
  if (spec.kind == "grid") return std::make_unique<GridSource>(spec);
  if (spec.kind == "hitrun") return std::make_unique<HitRunSource>(spec);
  if (spec.kind == "reject") return std::make_unique<RejectSource>(spec);
  if (spec.kind == "fatfamily") return std::make_unique<FatFamilySource>(spec);
  if (spec.kind == "trees") return std::make_unique<TreeSource>(spec);
  throw ConfigError("unknown sampler kind '" + spec.kind + "'");
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, mixed with the seed.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return SplitMix64(seed ^ SplitMix64(h));
}

std::vector<ProportionRow> ProportionTable::Group(std::string_view group) const {
  std::vector<ProportionRow> out;
  for (const auto& r : rows) {
    if (r.group == group) out.push_back(r);
  }
  return out;
}

double ProportionTable::Percent(std::string_view group, std::string_view category) const {
  for (const auto& r : rows) {
    if (r.group == group && r.category == category) return r.percent();
  }
  return 0;
}

std::uint64_t ProportionTable::Count(std::string_view group, std::string_view category) const {
  for (const auto& r : rows) {
    if (r.group == group && r.category == category) return r.count;
  }
  return 0;
}

namespace {

std::string Fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string Fraction(std::uint64_t count, std::uint64_t total) {
  if (total == 0) return "0";
  return ToString(Rational(BigInt(count), BigInt(total)));
}

}  // namespace

std::string ProportionTable::ToCsv() const {
  std::string out = "experiment,group,category,count,total,fraction,percent,sd_percent\n";
  for (const auto& r : rows) {
    out += experiment + "," + r.group + "," + r.category + "," + std::to_string(r.count) + "," +
           std::to_string(r.total) + "," + Fraction(r.count, r.total) + "," + Fixed(r.percent()) +
           "," + Fixed(r.sd_percent) + "\n";
  }
  return out;
}

std::string ProportionTable::ToJson() const {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"group", r.group},
                         {"category", r.category},
                         {"count", r.count},
                         {"total", r.total},
                         {"fraction", Fraction(r.count, r.total)},
                         {"percent", Fixed(r.percent())},
                         {"sd_percent", Fixed(r.sd_percent)}});
  }
  nlohmann::ordered_json j{{"experiment", experiment}, {"rows", std::move(rows_json)}};
  return j.dump(2) + "\n";
}

ProportionTable RunExperiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  if (cfg.runs < 1) throw ConfigError("runs must be at least 1");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  if (cfg.dim != 0 && cfg.id != "table4" && cfg.id != "custom") {
    throw ConfigError("dim applies only to table4 and custom experiments");
  }
  if (cfg.id == "table1") {
    if (!cfg.sampler.empty()) throw ConfigError("table1 uses fixed samplers");
    return Table1(cfg);
  }
  if (cfg.id == "table2") {
    ProportionTable table{"table2", {}};
    const std::string spec = cfg.sampler.empty() ? "grid:hi=10,lo=0" : cfg.sampler;
    CurvatureGroup(ParseSamplerSpec(spec).str(), spec, cfg, table);
    return table;
  }
  if (cfg.id == "table3") return Table3(cfg);
  if (cfg.id == "table4") {
    if (!cfg.sampler.empty()) throw ConfigError("table4 uses the simplex sampler");
    return Table4(cfg);
  }
  if (cfg.id == "table5") {
    ProportionTable table{"table5", {}};
    const std::string spec =
        cfg.sampler.empty() ? "trees:count=480,eps=1/20,leaves=4" : cfg.sampler;
    CurvatureGroup(ParseSamplerSpec(spec).str(), spec, cfg, table);
    return table;
  }
  if (cfg.id == "custom") return Custom(cfg);
  throw ConfigError("unknown experiment '" + cfg.id + "' (expected table1..table5 or custom)");
}

}  // namespace tropicurv
