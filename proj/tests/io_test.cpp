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

#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>
#include "test_support.hpp"
#include "tropicurv/curvature.hpp"
#include "tropicurv/errors.hpp"
#include "tropicurv/io.hpp"
#include "tropicurv/segment.hpp"

namespace tropicurv {
namespace {

using testing::P;
using testing::R;
using testing::Tri;

TEST(ParsePointsTest, PrependsTheZeroCoordinate) {
  const auto pts = ParsePoints(" 1, 3 ; 0,0;3/2,-2.5 ");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].coords(), (std::vector<Rational>{0, 1, 3}));
  EXPECT_EQ(pts[2].coords(), (std::vector<Rational>{0, R("3/2"), R("-5/2")}));
}

TEST(ParsePointsTest, RejectsMalformedLists) {
  for (const char* bad : {"", ";", "1,2;;3,4", "1,,2", "1,2;3", "a,b", "1,2;3,4;5,x"}) {
    EXPECT_THROW(ParsePoints(bad), ParseError) << bad;
  }
}

TEST(ParseTriangleTest, UsesTheFirstThreePoints) {
  EXPECT_EQ(ParseTriangle("1,2;3,4;5,6;7,8")[2], P("5,6"));
  EXPECT_THROW(ParseTriangle("1,2;3,4"), ParseError);
}

TEST(FormatPointsTest, RoundTrips) {
  const auto t = Tri("1/3,-2;0,0;7,5/4");
  EXPECT_EQ(FormatPoints({t[0], t[1], t[2]}), "1/3,-2;0,0;7,5/4");
  EXPECT_EQ(ParsePoints(FormatPoints({t[0], t[1], t[2]})),
            (std::vector<ProjectivePoint>{t[0], t[1], t[2]}));
}

TEST(SideTest, ParsesAndNamesSides) {
  EXPECT_EQ(ParseSide("a:bc"), 0);
  EXPECT_EQ(ParseSide("b:ac"), 1);
  EXPECT_EQ(ParseSide("c:ab"), 2);
  EXPECT_EQ(SideName(1), "b:ac");
  EXPECT_THROW(ParseSide("a:cb"), ParseError);
  EXPECT_THROW(ParseSide("d:ab"), ParseError);
}

TEST(CurvatureFormatTest, TextReport) {
  const auto t = Tri("0,0;448,449;452,256");
  const auto text = FormatCurvatureText(ClassifyCurvature(t[0], t[1], t[2]));
  EXPECT_EQ(text.rfind("class=Undefined\n", 0), 0u);
  EXPECT_NE(text.find("side=b:ac length=452 signs={-,0,+} h2=1,-91774/113,201601"),
            std::string::npos);
  EXPECT_NE(text.find("witness side=b:ac"), std::string::npos);
}

TEST(CurvatureFormatTest, JsonUsesExactStrings) {
  const auto t = Tri("1,3;0,0;3,2");
  const auto j = nlohmann::json::parse(FormatCurvatureJson(ClassifyCurvature(t[0], t[1], t[2])));
  EXPECT_EQ(j["class"], "Negative");
  ASSERT_EQ(j["comparisons"].size(), 3u);
  const auto& a = j["comparisons"][0];
  EXPECT_EQ(a["side"], "a:bc");
  EXPECT_EQ(a["length"], "3");
  EXPECT_EQ(a["signs"], "{-,0}");
  EXPECT_EQ(a["f"].size(), 4u);
  EXPECT_EQ(a["f"][1]["t"], "1");
  EXPECT_EQ(a["f"][1]["value"], "2");
  EXPECT_TRUE(j["witnesses"].empty());
}

TEST(TypeFormatTest, TextAndJson) {
  TriangleTypeSet s;
  s.insert(TriangleType::kT5);
  EXPECT_EQ(FormatTypeText(s), "types={T5}\ngeneric=false\n");
  const auto j = nlohmann::json::parse(FormatTypeJson(s));
  EXPECT_EQ(j["types"][0], "T5");
  EXPECT_EQ(j["generic"], false);
}

TEST(ProfileExportTest, SkinnyExampleCsv) {
  const auto csv = FormatProfileCsv(MakeProfileExport(Tri("1,3;0,0;3,2"), 0));
  EXPECT_EQ(csv,
            "# side=a:bc\n# length=3\n# h_squared=1,-3,9\n"
            "kind,t,f,f_squared,h_squared\n"
            "breakpoint,0,3,9,9\nbreakpoint,1,2,4,7\nbreakpoint,2,2,4,7\nbreakpoint,3,3,9,9\n");
}

TEST(ProfileExportTest, DenseSamplesCoverTheSide) {
  const auto p = MakeProfileExport(Tri("0,2;1,0;3,3"), 0, R("1/2"));
  const auto csv = FormatProfileCsv(p);
  EXPECT_NE(csv.find("sample,1.5,3,9,6.75\n"), std::string::npos);
  EXPECT_NE(csv.find("sample,3,3,9,9\n"), std::string::npos);
  const auto j = nlohmann::json::parse(FormatProfileJson(p));
  EXPECT_EQ(j["h_squared"]["c1"], "-3");
  EXPECT_EQ(j["samples"].size(), 7u);
  EXPECT_DOUBLE_EQ(j["samples"][3]["h_squared"].get<double>(), 6.75);
  EXPECT_THROW(MakeProfileExport(Tri("0,2;1,0;3,3"), 0, Rational(0)), DomainError);
}

// Breakpoint rows evaluate back to the exact profile.
TEST(ProfileExportTest, BreakpointsRoundTripExactly) {
  RngStream rng(61, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = testing::RandomTriangle(rng, 3 + trial % 4);
    const int v = trial % 3;
    std::istringstream in(FormatProfileCsv(MakeProfileExport(t, v)));
    const ProjectivePoint& apex = t[v];
    const TropicalSegment seg(t[v == 0 ? 1 : 0], t[v == 2 ? 1 : 2]);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      if (line.rfind("breakpoint,", 0) != 0) continue;
      std::vector<std::string> cols;
      std::stringstream ls(line);
      for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
      ASSERT_EQ(cols.size(), 5u);
      const Rational tt = R(cols[1]), f = R(cols[2]);
      EXPECT_EQ(TropDistance(apex, seg.At(tt)), f);
      EXPECT_EQ(R(cols[3]), f * f);
      ++rows;
    }
    EXPECT_GE(rows, 2);
  }
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(6.75), "6.75");
  EXPECT_EQ(FormatDouble(3.0), "3");
}

}  // namespace
}  // namespace tropicurv
