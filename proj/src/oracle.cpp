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

#include "hexcover/hex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

namespace hexcover {

bool point_in_ring(Point p, std::span<const Point> ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[i], b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

bool in_box(const Box& b, Point p) {
  return p.x >= b.min_corner().x && p.x <= b.max_corner().x && p.y >= b.min_corner().y &&
         p.y <= b.max_corner().y;
}

std::vector<std::vector<Point>> rings_of(const Polygon& poly) {
  std::vector<std::vector<Point>> rings{poly.outer()};
  for (auto& h : poly.holes()) rings.push_back(std::move(h));
  return rings;
}

bool in_rings(const std::vector<std::vector<Point>>& rings, Point p) {
  if (!point_in_ring(p, rings.front())) return false;
  for (std::size_t i = 1; i < rings.size(); ++i) {
    if (point_in_ring(p, rings[i])) return false;
  }
  return true;
}

double rings_distance(const std::vector<std::vector<Point>>& rings, Point p) {
  double best = INFINITY;
  for (const auto& r : rings) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      best = std::min(best, distance_to_segment(p, r[i], r[(i + 1) % r.size()]));
    }
  }
  return best;
}

// Parameter t on a-b where it crosses c-d, if the two segments intersect at a
// single point.
bool crossing(Point a, Point b, Point c, Point d, double& t) {
  const Point r = b - a, s = d - c;
  const double den = cross(r, s);
  if (den == 0.0) return false;
  const Point ac = c - a;
  t = cross(ac, s) / den;
  const double u = cross(ac, r) / den;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

}  // namespace

bool LandTester::Shape::contains(Point p) const { return in_box(box, p) && in_rings(rings, p); }

LandTester::LandTester(const Region& region) {
  boundary_ = {rings_of(region.boundary()), region.boundary().envelope()};
  for (const Obstacle& o : region.obstacles()) {
    obstacles_.push_back({rings_of(o.shape), o.shape.envelope()});
  }
}

bool LandTester::on_land(Point p) const {
  if (!boundary_.contains(p)) return false;
  for (const Shape& s : obstacles_) {
    if (s.contains(p)) return false;
  }
  return true;
}

double LandTester::edge_distance(Point p) const {
  double best = rings_distance(boundary_.rings, p);
  for (const Shape& s : obstacles_) best = std::min(best, rings_distance(s.rings, p));
  return best;
}

SightTester::SightTester(const Region& region) : eps_(1e-9 * region.sensing_radius()) {
  for (const Obstacle& o : region.obstacles()) {
    if (o.cls == ObstacleClass::Opaque) blocks_.push_back({rings_of(o.shape), o.shape.envelope()});
  }
}

bool SightTester::strictly_inside(const Block& b, Point p) const {
  return in_box(b.box, p) && in_rings(b.rings, p) && rings_distance(b.rings, p) > eps_;
}

bool SightTester::clear(Point a, Point b) const {
  const Box seg{{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
  std::vector<double> ts;
  for (const Block& block : blocks_) {
    if (!boxes_overlap(seg, block.box)) continue;
    // Split a-b at every crossing with the block's edges; the segment enters
    // the interior iff the midpoint of some piece is strictly inside.
    ts.assign({0.0, 1.0});
    for (const auto& ring : block.rings) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point c = ring[i], d = ring[(i + 1) % ring.size()];
        double t = 0.0;
        if (crossing(a, b, c, d, t)) ts.push_back(t);
        // Vertices lying on a-b also split it (covers collinear edges).
        const Point ab = b - a;
        const double len2 = dot(ab, ab);
        if (len2 > 0.0 && distance_to_segment(c, a, b) <= eps_) {
          ts.push_back(std::clamp(dot(c - a, ab) / len2, 0.0, 1.0));
        }
      }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (ts[i] - ts[i - 1] <= 0.0) continue;
      const double m = 0.5 * (ts[i] + ts[i - 1]);
      if (strictly_inside(block, a + m * (b - a))) return false;
    }
  }
  return true;
}

std::vector<Point> sample_land(const Region& region, double density, std::uint64_t seed) {
  if (!(density >= 100.0)) throw ValidationError("oracle density must be >= 100");
  const LandTester land(region);
  const Box bbox = region.bounding_box();
  const double h = std::sqrt(hexagon_area(region.sensing_radius()) / density);
  const double x0 = bbox.min_corner().x, y0 = bbox.min_corner().y;
  const auto nx = static_cast<std::int64_t>(std::ceil((bbox.max_corner().x - x0) / h));
  const auto ny = static_cast<std::int64_t>(std::ceil((bbox.max_corner().y - y0) / h));
  std::vector<Point> out;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::int64_t row = 0; row < ny; ++row) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(row)};
    std::mt19937_64 rng(seq);
    for (std::int64_t col = 0; col < nx; ++col) {
      const Point p{x0 + (static_cast<double>(col) + unit(rng)) * h,
                    y0 + (static_cast<double>(row) + unit(rng)) * h};
      if (land.on_land(p)) out.push_back(p);
    }
  }
  return out;
}

CoverageReport coverage_report(const Region& region, std::span<const Point> sensors, int k,
                               PlanMode mode, double density, std::uint64_t seed,
                               std::size_t max_uncovered) {
  if (k < 1 || k > 3) throw ValidationError("k must be 1, 2 or 3");
  const double r_s = region.sensing_radius();
  const LandTester land(region);
  const double slack = region.tolerances().band;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const Point s = sensors[i];
    if (!land.on_land(s) && land.edge_distance(s) > slack) {
      std::ostringstream msg;
      msg << "sensors[" << i << "] at (" << s.x << ", " << s.y << ") is not on land";
      throw ValidationError(msg.str());
    }
  }

  std::vector<Point> unique(sensors.begin(), sensors.end());
  std::sort(unique.begin(), unique.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  // Spatial hash with r_s buckets: a sample only looks at the 3x3 block
  // around its own bucket.
  auto bucket = [r_s](Point p) {
    return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(std::floor(p.x / r_s)),
                                                 static_cast<std::int64_t>(std::floor(p.y / r_s))};
  };
  auto key = [](std::int64_t bx, std::int64_t by) {
    return (static_cast<std::uint64_t>(bx) << 32) ^ static_cast<std::uint64_t>(by & 0xffffffff);
  };
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const auto [bx, by] = bucket(unique[i]);
    grid[key(bx, by)].push_back(i);
  }

  const SightTester sight(region);
  const bool check_sight = mode == PlanMode::Opaque && !sight.empty();
  const double r2 = r_s * r_s;

  CoverageReport rep;
  rep.mode = mode;
  rep.k = k;
  rep.density = density;
  rep.seed = seed;
  const std::vector<Point> samples = sample_land(region, density, seed);
  rep.samples = samples.size();
  rep.min_multiplicity = samples.empty() ? 0 : INT32_MAX;
  for (const Point& p : samples) {
    int mult = 0;
    const auto [bx, by] = bucket(p);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find(key(bx + dx, by + dy));
        if (it == grid.end()) continue;
        for (const std::size_t i : it->second) {
          const Point d = p - unique[i];
          if (dot(d, d) > r2) continue;
          if (check_sight && !sight.clear(unique[i], p)) continue;
          ++mult;
        }
      }
    }
    rep.min_multiplicity = std::min(rep.min_multiplicity, mult);
    if (mult >= k) {
      ++rep.covered;
    } else if (rep.uncovered_points.size() < max_uncovered) {
      rep.uncovered_points.push_back(p);
    }
  }
  rep.empty = samples.empty();
  rep.fraction = rep.empty ? 1.0
                           : static_cast<double>(rep.covered) / static_cast<double>(rep.samples);
  return rep;
}

}  // namespace hexcover
