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

#ifndef TROPICURV_IO_HPP_
#define TROPICURV_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropicurv/curvature.hpp"
#include "tropicurv/plane_types.hpp"
#include "tropicurv/point.hpp"
#include "tropicurv/samplers.hpp"
#include "tropicurv/segment.hpp"

namespace tropicurv {

// Parses "0,0;448,449;452,256": vertices separated by ';', coordinates by
// ',', each an integer, "p/q" or an exact decimal. Every vertex gets an
// implicit leading 0, so "x,y" is the point (0, x, y) of R^3 / R1.
// Throws ParseError on malformed text or vertices of unequal length.
std::vector<ProjectivePoint> ParsePoints(std::string_view text);

// The first three vertices of ParsePoints. Throws ParseError when fewer
// than three are given.
Triangle ParseTriangle(std::string_view text);

// Inverse of ParsePoints: short-hand coordinates, ',' and ';' separated.
std::string FormatPoints(const std::vector<ProjectivePoint>& points);

// Which vertex is compared against which side: "a:bc", "b:ac", "c:ab".
// Throws ParseError otherwise.
int ParseSide(std::string_view text);
std::string_view SideName(int vertex_index);

// Human-readable report: one key=value line per fact.
std::string FormatCurvatureText(const CurvatureReport& report);
std::string FormatCurvatureJson(const CurvatureReport& report);

std::string FormatTypeText(const TriangleTypeSet& types);
std::string FormatTypeJson(const TriangleTypeSet& types);

// Distance profile export for one side. `step` > 0 adds plot samples of
// f^2 and h^2 at t = 0, step, 2 step, ... and at the far end.
struct ProfileExport {
  int vertex_index = 0;
  SideComparison comparison;
  TropicalSegment segment;
  std::optional<Rational> step;
};

ProfileExport MakeProfileExport(const Triangle& t, int vertex_index,
                                std::optional<Rational> step = std::nullopt);
std::string FormatProfileCsv(const ProfileExport& p);
std::string FormatProfileJson(const ProfileExport& p);

// Shortest round-trip decimal for plotting columns.
std::string FormatDouble(double x);

}  // namespace tropicurv

#endif  // TROPICURV_IO_HPP_
