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

#include "tropicurv/io.hpp"

#include <array>
#include <charconv>

#include <nlohmann/json.hpp>

namespace tropicurv {
namespace {

using Json = nlohmann::ordered_json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Json PointJson(const ProjectivePoint& p) {
  Json out = Json::array();
  for (const auto& x : p.coords()) out.push_back(ToString(x));
  return out;
}

Json QuadJson(const QuadraticPoly& q) {
  return {{"c2", ToString(q.c2)}, {"c1", ToString(q.c1)}, {"c0", ToString(q.c0)}};
}

Json KnotsJson(const PiecewiseLinearFn& f) {
  Json out = Json::array();
  for (const auto& k : f.knots()) out.push_back({{"t", ToString(k.t)}, {"value", ToString(k.value)}});
  return out;
}

std::string QuadText(const QuadraticPoly& q) {
  return ToString(q.c2) + "," + ToString(q.c1) + "," + ToString(q.c0);
}

}  // namespace

std::vector<ProjectivePoint> ParsePoints(std::string_view text) {
  if (Trim(text).empty()) throw ParseError("empty point list");
  std::vector<ProjectivePoint> out;
  for (auto vertex : Split(text, ';')) {
    vertex = Trim(vertex);
    if (vertex.empty()) throw ParseError("empty vertex in point list '" + std::string(text) + "'");
    std::vector<Rational> coords;
    for (auto field : Split(vertex, ',')) {
      field = Trim(field);
      if (field.empty()) throw ParseError("empty coordinate in '" + std::string(vertex) + "'");
      coords.push_back(ParseRational(field));
    }
    if (!out.empty() && coords.size() + 1 != out.front().dim()) {
      throw ParseError("vertices have different numbers of coordinates");
    }
    out.push_back(ProjectivePoint::FromReduced(coords));
  }
  return out;
}

Triangle ParseTriangle(std::string_view text) {
  auto pts = ParsePoints(text);
  if (pts.size() < 3) throw ParseError("a triangle needs three vertices");
  return {pts[0], pts[1], pts[2]};
}

std::string FormatPoints(const std::vector<ProjectivePoint>& points) {
  std::string out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) out += ';';
    for (std::size_t i = 1; i < points[k].dim(); ++i) {
      if (i > 1) out += ',';
      out += ToString(points[k][i]);
    }
  }
  return out;
}

int ParseSide(std::string_view text) {
  for (int v = 0; v < 3; ++v) {
    if (text == SideName(v)) return v;
  }
  throw ParseError("side must be one of a:bc, b:ac, c:ab (got '" + std::string(text) + "')");
}

std::string_view SideName(int vertex_index) {
  static constexpr std::array<std::string_view, 3> kNames{"a:bc", "b:ac", "c:ab"};
  return kNames.at(static_cast<std::size_t>(vertex_index));
}

std::string FormatCurvatureText(const CurvatureReport& report) {
  std::string out = "class=" + std::string(ToString(report.curvature)) + "\n";
  const auto& t = report.triangle;
  out += "triangle=" + FormatPoints({t[0], t[1], t[2]}) + "\n";
  for (const auto& cmp : report.comparisons) {
    const std::string side(SideName(cmp.vertex_index));
    out += "side=" + side + " length=" + ToString(report.side_lengths[cmp.vertex_index]) +
           " signs=" + cmp.union_signs.str() + " h2=" + QuadText(cmp.h_squared) + "\n";
    out += "side=" + side + " f=";
    bool first = true;
    for (const auto& k : cmp.f.knots()) {
      if (!first) out += ';';
      first = false;
      out += "(" + ToString(k.t) + "," + ToString(k.value) + ")";
    }
    out += "\n";
  }
  for (const auto& w : report.witnesses) {
    out += "witness side=" + std::string(SideName(w.vertex_index)) +
           " sign=" + (w.sign < 0 ? "-" : "+") + " interval=[" + ToString(w.t_lo) + "," +
           ToString(w.t_hi) + "]\n";
  }
  return out;
}

std::string FormatCurvatureJson(const CurvatureReport& report) {
  Json j;
  j["class"] = ToString(report.curvature);
  j["triangle"] = {PointJson(report.triangle[0]), PointJson(report.triangle[1]),
                   PointJson(report.triangle[2])};
  Json comparisons = Json::array();
  for (const auto& cmp : report.comparisons) {
    Json pieces = Json::array();
    for (const auto& ps : cmp.piece_signs) {
      pieces.push_back({{"t_lo", ToString(ps.t_lo)},
                        {"t_hi", ToString(ps.t_hi)},
                        {"delta", QuadJson(ps.delta)},
                        {"signs", ps.signs.str()}});
    }
    comparisons.push_back({{"side", SideName(cmp.vertex_index)},
                           {"length", ToString(report.side_lengths[cmp.vertex_index])},
                           {"f", KnotsJson(cmp.f)},
                           {"h_squared", QuadJson(cmp.h_squared)},
                           {"pieces", std::move(pieces)},
                           {"signs", cmp.union_signs.str()}});
  }
  j["comparisons"] = std::move(comparisons);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"side", SideName(w.vertex_index)},
                         {"sign", w.sign < 0 ? "-" : "+"},
                         {"t_lo", ToString(w.t_lo)},
                         {"t_hi", ToString(w.t_hi)}});
  }
  j["witnesses"] = std::move(witnesses);
  return j.dump(2) + "\n";
}

std::string FormatTypeText(const TriangleTypeSet& types) {
  return "types=" + types.str() + "\ngeneric=" + (types.generic ? "true" : "false") + "\n";
}

std::string FormatTypeJson(const TriangleTypeSet& types) {
  Json members = Json::array();
  for (auto t : types.members()) members.push_back(ToString(t));
  Json j{{"types", std::move(members)}, {"generic", types.generic}};
  return j.dump(2) + "\n";
}

ProfileExport MakeProfileExport(const Triangle& t, int vertex_index, std::optional<Rational> step) {
  if (step && *step <= 0) throw DomainError("profile step must be positive");
  const int p = vertex_index == 0 ? 1 : 0;
  const int q = vertex_index == 2 ? 1 : 2;
  return {vertex_index, CompareSide(vertex_index, t[0], t[1], t[2]),
          TropicalSegment(t[p], t[q]), std::move(step)};
}

namespace {

struct Sample {
  Rational t;
  Rational f;
};

std::vector<Sample> PlotSamples(const ProfileExport& p) {
  std::vector<Sample> out;
  if (!p.step) return out;
  const Rational& end = p.comparison.f.hi();
  for (Rational t = 0; t < end; t += *p.step) out.push_back({t, p.comparison.f(t)});
  out.push_back({end, p.comparison.f(end)});
  return out;
}

}  // namespace

std::string FormatProfileCsv(const ProfileExport& p) {
  const auto& cmp = p.comparison;
  const auto& h2 = cmp.h_squared;
  std::string out = "# side=" + std::string(SideName(p.vertex_index)) + "\n";
  out += "# length=" + ToString(cmp.f.hi()) + "\n";
  out += "# h_squared=" + QuadText(h2) + "\n";
  out += "kind,t,f,f_squared,h_squared\n";
  for (const auto& k : cmp.f.knots()) {
    out += "breakpoint," + ToString(k.t) + "," + ToString(k.value) + "," +
           ToString(k.value * k.value) + "," + ToString(h2(k.t)) + "\n";
  }
  for (const auto& s : PlotSamples(p)) {
    out += "sample," + FormatDouble(ToDouble(s.t)) + "," + FormatDouble(ToDouble(s.f)) + "," +
           FormatDouble(ToDouble(s.f * s.f)) + "," + FormatDouble(ToDouble(h2(s.t))) + "\n";
  }
  return out;
}

std::string FormatProfileJson(const ProfileExport& p) {
  const auto& cmp = p.comparison;
  Json seg = Json::array();
  for (const auto& b : p.segment.breakpoints()) {
    seg.push_back({{"t", ToString(b.t)}, {"point", PointJson(b.point)}});
  }
  Json samples = Json::array();
  for (const auto& s : PlotSamples(p)) {
    samples.push_back({{"t", ToDouble(s.t)},
                       {"f", ToDouble(s.f)},
                       {"f_squared", ToDouble(s.f * s.f)},
                       {"h_squared", ToDouble(cmp.h_squared(s.t))}});
  }
  Json j{{"side", SideName(p.vertex_index)},
         {"length", ToString(cmp.f.hi())},
         {"segment", std::move(seg)},
         {"f", KnotsJson(cmp.f)},
         {"h_squared", QuadJson(cmp.h_squared)},
         {"signs", cmp.union_signs.str()},
         {"samples", std::move(samples)}};
  return j.dump(2) + "\n";
}

std::string FormatDouble(double x) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace tropicurv
