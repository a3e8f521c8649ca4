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

// Command-line front end: classify triangles, export distance profiles,
// draw samples and run the Monte Carlo experiments.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>
#include "tropicurv/curvature.hpp"
#include "tropicurv/errors.hpp"
#include "tropicurv/experiments.hpp"
#include "tropicurv/io.hpp"
#include "tropicurv/plane_types.hpp"
#include "tropicurv/rational.hpp"

namespace {

using namespace tropicurv;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitConfig = 4;

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("TROPICURV_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const auto v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("TROPICURV_SEED is not an unsigned integer: '") + env + "'");
  }
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing '" + out_path + "'");
}

std::string SampleText(const TriangleSource::Batch& batch, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json tris = nlohmann::ordered_json::array();
    for (const auto& t : batch.triangles) {
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (const auto& p : t) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (const auto& x : p.coords()) coords.push_back(ToString(x));
        pts.push_back(std::move(coords));
      }
      tris.push_back(std::move(pts));
    }
    nlohmann::ordered_json j{{"triangles", std::move(tris)}, {"rejected", batch.rejected}};
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& t : batch.triangles) out += FormatPoints({t[0], t[1], t[2]}) + "\n";
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact tropical segments and Alexandrov curvature of tropical triangles"};
  app.require_subcommand(1);

  std::string points, format, side, step_text, out_path, sampler, id = "table4";
  std::string reading = "joint";
  std::size_t n = 10, trials = 1000, runs = 10, dim = 0, threads = 1;
  std::optional<std::uint64_t> seed;

  auto* curvature = app.add_subcommand("curvature", "Alexandrov curvature class of a triangle");
  curvature->add_option("--points", points, "Vertices as 'x1,x2;y1,y2;z1,z2' (leading 0 implied)")
      ->required();
  curvature->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* type = app.add_subcommand("type", "Combinatorial type of a plane triangle");
  type->add_option("--points", points, "Vertices as 'x1,x2;y1,y2;z1,z2'")->required();
  type->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* profile = app.add_subcommand("profile", "Distance profile of one vertex against a side");
  profile->add_option("--points", points, "Vertices as 'x1,x2;y1,y2;z1,z2'")->required();
  profile->add_option("--side", side, "One of a:bc, b:ac, c:ab")->required();
  profile->add_option("--step", step_text, "Dense sampling step, e.g. 1/10");
  profile->add_option("--out", out_path, "Output file (default stdout)");
  profile->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* sample = app.add_subcommand("sample", "Draw triangles from a sampler");
  sample->add_option("--sampler", sampler, "Sampler spec, e.g. simplex:n=3")->required();
  sample->add_option("--n", n, "Number of triangles");
  sample->add_option("--seed", seed, "Seed (default TROPICURV_SEED or 1)");
  sample->add_option("--out", out_path, "Output file (default stdout)");
  sample->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("--id", id, "table1..table5 or custom");
  experiment->add_option("--trials", trials, "Triangles per run");
  experiment->add_option("--runs", runs, "Independent runs");
  experiment->add_option("--seed", seed, "Seed (default TROPICURV_SEED or 1)");
  experiment->add_option("--dim", dim, "Dimension n (table4 and custom)");
  experiment->add_option("--sampler", sampler, "Sampler spec (custom, or override a table)");
  experiment->add_option("--reading", reading, "Simplex reading: joint, vertex or cube");
  experiment->add_option("--threads", threads, "Worker threads; results do not depend on it");
  experiment->add_option("--out", out_path, "Output file (default stdout)");
  experiment->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  if (curvature->parsed()) {
    const auto t = ParseTriangle(points);
    const auto report = ClassifyCurvature(t[0], t[1], t[2]);
    Emit(format == "json" ? FormatCurvatureJson(report) : FormatCurvatureText(report), "");
  } else if (type->parsed()) {
    const auto t = ParseTriangle(points);
    const auto types = ClassifyType(t[0], t[1], t[2]);
    Emit(format == "json" ? FormatTypeJson(types) : FormatTypeText(types), "");
  } else if (profile->parsed()) {
    const auto t = ParseTriangle(points);
    std::optional<Rational> step;
    if (!step_text.empty()) step = ParseRational(step_text);
    const auto p = MakeProfileExport(t, ParseSide(side), step);
    Emit(format == "json" ? FormatProfileJson(p) : FormatProfileCsv(p), out_path);
  } else if (sample->parsed()) {
    const auto spec = ParseSamplerSpec(sampler);
    const auto source = TriangleSource::Create(spec);
    const std::uint64_t s = seed ? *seed : DefaultSeed();
    const auto batch = source->Draw(DeriveSeed(s, spec.str()), 0, n);
    if (batch.rejected > 0) std::cerr << "rejected=" << batch.rejected << "\n";
    Emit(SampleText(batch, format), out_path);
  } else if (experiment->parsed()) {
    ExperimentConfig cfg;
    cfg.id = id;
    cfg.trials = trials;
    cfg.runs = runs;
    cfg.seed = seed ? *seed : DefaultSeed();
    cfg.dim = dim;
    cfg.sampler = sampler;
    cfg.reading = ParseSimplexReading(reading);
    cfg.threads = threads;
    const auto table = RunExperiment(cfg);
    Emit(format == "json" ? table.ToJson() : table.ToCsv(), out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const tropicurv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tropicurv::DimensionError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tropicurv::DegenerateError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const tropicurv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const tropicurv::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
