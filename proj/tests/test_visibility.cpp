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

#include "hexcover/oracle.hpp"
#include "hexcover/visibility.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hexcover;
using hexcover::testing::rect;
using hexcover::testing::square;

namespace {

// Area of the visible disk by casting rays against raw obstacle edges.
double ray_cast_area(Point x, const std::vector<Ring>& walls, double r, int rays) {
  double total = 0.0;
  const double dtheta = 2.0 * std::numbers::pi / rays;
  for (int i = 0; i < rays; ++i) {
    const double th = (i + 0.5) * dtheta;
    const Point d{std::cos(th), std::sin(th)};
    double t = r;
    for (const Ring& w : walls) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        const Point a = w[k], b = w[(k + 1) % w.size()];
        const Point e = b - a;
        const double den = cross(d, e);
        if (std::abs(den) < 1e-15) continue;
        const Point ax = a - x;
        const double s = cross(ax, e) / den;
        const double u = cross(ax, d) / den;
        if (s > 1e-12 && u >= 0.0 && u <= 1.0) t = std::min(t, s);
      }
    }
    total += 0.5 * t * t * dtheta;
  }
  return total;
}

Ring ngon_ring(Point c, double r, int n) {
  Ring out;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    out.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return out;
}

}  // namespace

TEST_CASE("free visibility is the inscribed n-gon") {
  const Polygon p = visibility_polygon({0, 0}, SegmentSet{}, 1.0, 64);
  CHECK(area(p) == doctest::Approx(32.0 * std::sin(2.0 * std::numbers::pi / 64)).epsilon(1e-12));
  CHECK(area(p) == doctest::Approx(3.13655).epsilon(1e-5));
}

TEST_CASE("long wall at distance 0.5") {
  const Region region(Polygon(square(-5, -5, 10)), {{Polygon(rect(-3, 0.5, 3, 0.8)), ObstacleClass::Opaque}}, 1.0);
  const Polygon vis = visibility_polygon({0, 0}, occluders_of(region), 1.0, 64);
  const double oracle = ray_cast_area({0, 0}, {rect(-3, 0.5, 3, 0.8)}, 1.0, 10000);
  CHECK(std::abs(area(vis) - oracle) < 0.01 * oracle);
}

TEST_CASE("sensor on the wall's own boundary") {
  const Region region(Polygon(square(-5, -5, 10)), {{Polygon(rect(-3, 0.5, 3, 0.8)), ObstacleClass::Opaque}}, 1.0);
  const Point x{0.0, 0.5};
  const RspPolygon r = rsp(x, region, 64);
  const double half = 16.0 * std::sin(2.0 * std::numbers::pi / 64);
  CHECK(area(r.polygon) == doctest::Approx(half).epsilon(1e-3));
  const SightTester sight(region);
  for (const Polygon& p : r.polygon.polygons()) {
    for (const Point v : p.outer()) CHECK(sight.clear(x, v));
  }
}

TEST_CASE("placement inside an opaque obstacle is refused") {
  const Region region(Polygon(square(-5, -5, 10)), {{Polygon(rect(-1, -1, 1, 1)), ObstacleClass::Opaque}}, 1.0);
  CHECK_THROWS_AS(visibility_polygon({0, 0}, occluders_of(region), 1.0, 64), PlacementError);
  CHECK_THROWS_AS(rsp({0, 0}, region, 64), PlacementError);
  CHECK_THROWS_AS(rsp({3, 3}, region, 8), ValidationError);
}

TEST_CASE("rsp without opaque obstacles") {
  const Region open(Polygon(square(0, 0, 10)), {}, 1.0);
  const RspPolygon inner = rsp({5, 5}, open, 64);
  CHECK(area(inner.polygon) == doctest::Approx(32.0 * std::sin(2.0 * std::numbers::pi / 64)).epsilon(1e-9));
  const RspPolygon corner = rsp({0, 0}, open, 64);
  CHECK(area(corner.polygon) == doctest::Approx(8.0 * std::sin(2.0 * std::numbers::pi / 64)).epsilon(1e-9));

  const Region lake(Polygon(square(0, 0, 10)), {{Polygon(rect(5.3, 4, 7, 6)), ObstacleClass::Transparent}}, 1.0);
  const PolygonSet disk(Polygon(ngon_ring({5, 5}, 1.0, 64)));
  const RspPolygon seen = rsp({5, 5}, lake, 64);
  CHECK(area(seen.polygon) == doctest::Approx(area(set_intersection(disk, lake.land()))).epsilon(1e-9));
}

TEST_CASE("opaque square hides the land behind it") {
  const Region region(Polygon(square(0, 0, 10)), {{Polygon(rect(5.5, 4.5, 6.0, 5.5)), ObstacleClass::Opaque}}, 2.0);
  const Point x{5, 5};
  const RspPolygon r = rsp(x, region, 64);
  CHECK(locate({6.8, 5.0}, r.polygon) == Location::Exterior);
  CHECK(locate({4.0, 5.0}, r.polygon) == Location::Interior);

  const SightTester sight(region);
  const LandTester land(region);
  const Ring disk = ngon_ring(x, 2.0, 64);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> pos(-2.0, 2.0);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const Point p{x.x + pos(rng), x.y + pos(rng)};
    const bool expected = point_in_ring(p, disk) && land.on_land(p) && sight.clear(x, p);
    const bool got = locate(p, r.polygon) != Location::Exterior;
    disagreements += expected != got;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("finer n-gons contain coarser ones") {
  const Region region(Polygon(square(0, 0, 10)),
                      {{Polygon(rect(5.5, 4.5, 6.0, 5.5)), ObstacleClass::Opaque},
                       {Polygon(rect(3.0, 5.5, 4.0, 6.5)), ObstacleClass::Opaque}},
                      2.0);
  const RspPolygon coarse = rsp({5, 5}, region, 64);
  const RspPolygon fine = rsp({5, 5}, region, 128);
  CHECK(area(set_difference(coarse.polygon, fine.polygon)) < 1e-6 * 4.0);
  CHECK(area(fine.polygon) > area(coarse.polygon));
}

TEST_CASE("polygonisation deficit at 64 sides") {
  const Region open(Polygon(square(0, 0, 10)), {}, 1.0);
  const double deficit = 1.0 - area(rsp({5, 5}, open, 64).polygon) / std::numbers::pi;
  CHECK(deficit == doctest::Approx(1.0 - (32.0 / std::numbers::pi) * std::sin(std::numbers::pi / 32.0)).epsilon(1e-9));
  CHECK(deficit == doctest::Approx(0.0016).epsilon(0.02));
}
