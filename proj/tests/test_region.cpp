// Copyright 2026 The hexcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hexcover/region.hpp"
#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace hexcover;
using hexcover::testing::rect;
using hexcover::testing::square;

TEST_CASE("parse minimal and lake documents") {
  const Region r = parse_region(R"({"r_s": 1, "boundary": [[0,0],[10,0],[10,10],[0,10]], "obstacles": []})");
  CHECK(r.obstacles().empty());
  CHECK(r.sensing_radius() == 1.0);
  CHECK(area(r.land()) == doctest::Approx(100.0));

  const Region lake = parse_region(R"({"r_s": 2.5, "boundary": [[0,0],[10,0],[10,10],[0,10]],
      "obstacles": [{"class": "transparent", "ring": [[2,2],[4,2],[4,4],[2,4]]}]})");
  REQUIRE(lake.obstacles().size() == 1);
  CHECK(lake.obstacles()[0].cls == ObstacleClass::Transparent);
  CHECK(lake.sensing_radius() == 2.5);
  CHECK(lake.has_transparent());
  CHECK_FALSE(lake.has_opaque());
}

TEST_CASE("parse errors name the offending ring") {
  auto message = [](const char* doc) {
    try {
      parse_region(doc);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const std::string bowtie = message(R"({"r_s": 1, "boundary": [[0,0],[10,0],[10,10],[0,10]],
      "obstacles": [{"class": "opaque", "ring": [[1,1],[3,1],[3,3],[2,0.5],[1,3]]}]})");
  CHECK(bowtie.find("obstacles[0].ring") != std::string::npos);
  CHECK(bowtie.find("self-intersection") != std::string::npos);

  CHECK(message(R"({"r_s": 0, "boundary": [[0,0],[1,0],[1,1]], "obstacles": []})").find("r_s") != std::string::npos);
  CHECK(message(R"({"r_s": 1, "boundary": [[0,0],[1,0],[1,1]], "obstacles": [{"class": "glass", "ring": [[0,0],[1,0],[1,1]]}]})")
            .find("obstacles[0].class") != std::string::npos);
  CHECK_FALSE(message("{not json").empty());
  CHECK(message(R"({"r_s": 1, "boundary": [[0,0],[1,0],[1,1]], "obstacles": [{"class": "opaque", "ring": [[5,5],[6,5],[6,6]]}]})")
            .find("obstacles[0]") != std::string::npos);
}

TEST_CASE("accessible and sensable land") {
  const Polygon boundary(square(0, 0, 10));
  const Region one(boundary, {{Polygon(rect(2, 2, 4, 7)), ObstacleClass::Transparent}}, 1.0);
  CHECK(area(accessible_land(one)) == doctest::Approx(90.0));
  CHECK(area(sensable_land(one)) == doctest::Approx(area(accessible_land(one))));

  const Region all(boundary, {{Polygon(square(-1, -1, 12)), ObstacleClass::Opaque}}, 1.0);
  CHECK(accessible_land(all).empty());
  CHECK(area(accessible_land(all)) == 0.0);

  const Region none(boundary, {}, 1.0);
  CHECK(area(sensable_land(none)) == doctest::Approx(100.0));

  // Overlapping obstacles, checked against the grid-sampling oracle.
  const Region overlap(boundary,
                       {{Polygon(rect(1, 1, 6, 5)), ObstacleClass::Transparent},
                        {Polygon(rect(4, 3, 9, 8)), ObstacleClass::Opaque}},
                       1.0);
  const double exact = 100.0 - (20.0 + 25.0 - 4.0);
  CHECK(area(overlap.land()) == doctest::Approx(exact));
  CHECK(std::abs(hexcover::testing::land_area_oracle(overlap, 1000) - exact) < 0.05);
}

TEST_CASE("obstacle class does not change the land") {
  const Polygon boundary(square(0, 0, 10));
  const Region t(boundary, {{Polygon(rect(2, 2, 4, 7)), ObstacleClass::Transparent}}, 1.0);
  const Region o(boundary, {{Polygon(rect(2, 2, 4, 7)), ObstacleClass::Opaque}}, 1.0);
  CHECK(area(t.land()) == doctest::Approx(area(o.land())));
  CHECK(area(o.opaque_union()) == doctest::Approx(10.0));
  CHECK(t.opaque_union().empty());
}

TEST_CASE("adding an obstacle never adds land") {
  const Polygon boundary(square(0, 0, 10));
  std::vector<Obstacle> obs;
  double prev = area(Region(boundary, obs, 1.0).land());
  for (int i = 0; i < 5; ++i) {
    obs.push_back({Polygon(square(1.5 * i, 1.0 * i, 2.5)), ObstacleClass::Transparent});
    const double now = area(Region(boundary, obs, 1.0).land());
    CHECK(now <= prev + 1e-9);
    prev = now;
  }
}

TEST_CASE("accessibility includes the closure of the land") {
  const Region r(Polygon(square(0, 0, 10)), {{Polygon(rect(2, 2, 4, 4)), ObstacleClass::Opaque}}, 1.0);
  CHECK(r.accessible({1, 1}));
  CHECK(r.accessible({0, 5}));
  CHECK(r.accessible({2, 3}));
  CHECK_FALSE(r.accessible({3, 3}));
  CHECK_FALSE(r.accessible({11, 3}));
}

TEST_CASE("islands inside an obstacle are land") {
  const Region r(Polygon(square(0, 0, 10)),
                 {{Polygon(rect(2, 2, 8, 8), {square(4, 4, 1)}), ObstacleClass::Transparent}}, 1.0);
  CHECK(area(r.land()) == doctest::Approx(100.0 - 36.0 + 1.0));
  CHECK(r.accessible({4.5, 4.5}));
}
