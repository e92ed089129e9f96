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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hexcover::testing {

namespace {

bool ring_contains(const Ring& ring, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point a = ring[i], b = ring[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)) {
      in = !in;
    }
  }
  return in;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Ring rotated_rect(Point c, double w, double h, double angle) {
  const double cs = std::cos(angle), sn = std::sin(angle);
  Ring out;
  for (const auto [sx, sy] : {std::pair{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}) {
    const double x = 0.5 * w * sx, y = 0.5 * h * sy;
    out.push_back({c.x + cs * x - sn * y, c.y + sn * x + cs * y});
  }
  return out;
}

Box ring_box(const Ring& r, double margin) {
  Box b = ring_envelope(r);
  return {{b.min_corner().x - margin, b.min_corner().y - margin},
          {b.max_corner().x + margin, b.max_corner().y + margin}};
}

bool clear_of(const std::vector<Box>& taken, const Box& b) {
  return std::none_of(taken.begin(), taken.end(), [&](const Box& t) { return boxes_overlap(t, b); });
}

}  // namespace

bool inside(const Polygon& poly, Point p) {
  if (!ring_contains(poly.outer(), p)) return false;
  for (const Ring& h : poly.holes()) {
    if (ring_contains(h, p)) return false;
  }
  return true;
}

bool inside(const std::vector<Polygon>& polys, Point p) {
  return std::any_of(polys.begin(), polys.end(), [&](const Polygon& q) { return inside(q, p); });
}

bool in_hexagon(Point p, Point c, double r) {
  const double dx = std::abs(p.x - c.x), dy = std::abs(p.y - c.y);
  const double s3 = std::sqrt(3.0);
  return dy <= 0.5 * s3 * r && s3 * dx + dy <= s3 * r;
}

namespace {

double seg_distance(Point p, Point a, Point b) {
  const double ex = b.x - a.x, ey = b.y - a.y;
  const double len2 = ex * ex + ey * ey;
  double t = len2 > 0.0 ? ((p.x - a.x) * ex + (p.y - a.y) * ey) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * ex, p.y - a.y - t * ey);
}

double boundary_distance(const Polygon& poly, Point p) {
  double best = std::numeric_limits<double>::infinity();
  auto ring = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) best = std::min(best, seg_distance(p, r[i], r[(i + 1) % r.size()]));
  };
  ring(poly.outer());
  for (const Ring& h : poly.holes()) ring(h);
  return best;
}

}  // namespace

bool segment_clear(Point a, Point b, const std::vector<Polygon>& opaque) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  const double eps = 1e-9 * std::max(1.0, len);
  for (const Polygon& poly : opaque) {
    // Parameters where the segment meets an edge of this polygon.
    std::vector<double> ts{0.0, 1.0};
    auto collect = [&](const Ring& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Point c = r[i], d = r[(i + 1) % r.size()];
        const double ex = d.x - c.x, ey = d.y - c.y;
        const double den = dx * ey - dy * ex;
        const double cx = c.x - a.x, cy = c.y - a.y;
        if (std::abs(den) > 1e-300) {
          const double t = (cx * ey - cy * ex) / den;
          const double u = (cx * dy - cy * dx) / den;
          if (t > 0.0 && t < 1.0 && u >= -1e-12 && u <= 1.0 + 1e-12) ts.push_back(t);
        }
        // Polygon vertices lying on the segment split it as well.
        if (len > 0.0 && seg_distance(c, a, b) <= eps) {
          const double t = (cx * dx + cy * dy) / (len * len);
          if (t > 0.0 && t < 1.0) ts.push_back(t);
        }
      }
    };
    collect(poly.outer());
    for (const Ring& h : poly.holes()) collect(h);
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (ts[i + 1] - ts[i] <= 1e-15) continue;
      const double t = 0.5 * (ts[i] + ts[i + 1]);
      const Point m{a.x + t * dx, a.y + t * dy};
      if (inside(poly, m) && boundary_distance(poly, m) > eps) return false;
    }
  }
  return true;
}

std::vector<Polygon> opaque_shapes(const Region& region) {
  std::vector<Polygon> out;
  for (const Obstacle& o : region.obstacles()) {
    if (o.cls == ObstacleClass::Opaque) out.push_back(o.shape);
  }
  return out;
}

double grid_area(const Box& box, int n, const std::function<bool(Point)>& pred) {
  const double w = box.max_corner().x - box.min_corner().x;
  const double h = box.max_corner().y - box.min_corner().y;
  std::size_t hits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point p{box.min_corner().x + (i + 0.5) * w / n, box.min_corner().y + (j + 0.5) * h / n};
      hits += pred(p);
    }
  }
  return w * h * static_cast<double>(hits) / (static_cast<double>(n) * n);
}

Ring random_star(std::mt19937_64& rng, Point centre, double rmin, double rmax, int vertices) {
  // One vertex per angular sector keeps every gap below pi, so the ring is
  // star-shaped about the centre and therefore simple.
  Ring out;
  for (int i = 0; i < vertices; ++i) {
    const double a = 2.0 * std::numbers::pi * (i + uniform(rng, 0.0, 0.8)) / vertices;
    const double r = uniform(rng, rmin, rmax);
    out.push_back({centre.x + r * std::cos(a), centre.y + r * std::sin(a)});
  }
  return out;
}

Ring rect(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

Ring square(double x0, double y0, double side) { return rect(x0, y0, x0 + side, y0 + side); }

Ring comb(Point o, double width, double spine, double tooth_height, int teeth, double tooth_width) {
  Ring out{{o.x, o.y}, {o.x + width, o.y}};
  const double pitch = (width - tooth_width) / (teeth - 1);
  const double top = o.y + spine + tooth_height;
  for (int t = teeth - 1; t >= 0; --t) {
    const double x0 = o.x + t * pitch;
    const double x1 = x0 + tooth_width;
    if (t == teeth - 1) {
      out.push_back({x1, top});
    } else {
      out.push_back({x1, o.y + spine});
      out.push_back({x1, top});
    }
    out.push_back({x0, top});
    if (t > 0) out.push_back({x0, o.y + spine});
  }
  return out;
}

Region lake_instance(std::uint64_t seed, double r_s) {
  std::mt19937_64 rng(seed);
  const double L = 30.0 * r_s;
  std::vector<Obstacle> obstacles;
  std::vector<Box> taken;
  const int lakes = uniform_int(rng, 1, 5);
  for (int placed = 0, attempts = 0; placed < lakes && attempts < 1000; ++attempts) {
    const double rmin = uniform(rng, 2.0, 3.0) * r_s;
    const double rmax = rmin + uniform(rng, 0.5, 3.0) * r_s;
    const Point c{uniform(rng, 0.15 * L, 0.85 * L), uniform(rng, 0.15 * L, 0.85 * L)};
    // With at least eight sectors every edge stays beyond 0.76 rmin of the
    // centre, which leaves room for islands within 1.05 r_s of it.
    Ring outer = random_star(rng, c, rmin, rmax, uniform_int(rng, 8, 14));
    const int count = uniform_int(rng, 0, 2);
    const double dir = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Box b = ring_box(outer, 0.5 * r_s);
    if (!clear_of(taken, b)) continue;
    std::vector<Ring> islands;
    for (int k = 0; k < count; ++k) {
      const double a = dir + k * std::numbers::pi;
      const Point ic{c.x + 0.6 * r_s * std::cos(a), c.y + 0.6 * r_s * std::sin(a)};
      islands.push_back(random_star(rng, ic, 0.2 * r_s, 0.45 * r_s, uniform_int(rng, 5, 8)));
    }
    taken.push_back(b);
    obstacles.push_back({Polygon(std::move(outer), std::move(islands)), ObstacleClass::Transparent});
    ++placed;
  }
  return Region(Polygon(rect(0, 0, L, L)), std::move(obstacles), r_s);
}

Region opaque_instance(std::uint64_t seed, double r_s) {
  std::mt19937_64 rng(seed);
  const double L = 30.0 * r_s;
  std::vector<Obstacle> obstacles;
  std::vector<Box> taken;

  const double width = uniform(rng, 6.0, 10.0) * r_s;
  const int teeth = uniform_int(rng, 3, 5);
  const Point o{uniform(rng, 2.0 * r_s, L - width - 2.0 * r_s), uniform(rng, 2.0 * r_s, 0.5 * L)};
  Ring c = comb(o, width, uniform(rng, 0.6, 1.2) * r_s, uniform(rng, 2.0, 5.0) * r_s, teeth,
                uniform(rng, 0.4, 0.8) * r_s);
  taken.push_back(ring_box(c, 1.5 * r_s));
  obstacles.push_back({Polygon(std::move(c)), ObstacleClass::Opaque});

  const int blocks = uniform_int(rng, 1, 3);
  for (int placed = 0, attempts = 0; placed < blocks && attempts < 1000; ++attempts) {
    const Point centre{uniform(rng, 3.0, L / r_s - 3.0) * r_s, uniform(rng, 3.0, L / r_s - 3.0) * r_s};
    Ring block = (attempts % 2 == 0)
                     ? rotated_rect(centre, uniform(rng, 1.0, 4.0) * r_s, uniform(rng, 1.0, 4.0) * r_s,
                                    uniform(rng, 0.0, std::numbers::pi))
                     : random_star(rng, centre, 1.0 * r_s, 1.0 * r_s, uniform_int(rng, 5, 8));
    const Box b = ring_box(block, 1.5 * r_s);
    if (!clear_of(taken, b)) continue;
    taken.push_back(b);
    obstacles.push_back({Polygon(std::move(block)), ObstacleClass::Opaque});
    ++placed;
  }
  return Region(Polygon(rect(0, 0, L, L)), std::move(obstacles), r_s);
}

Region convex_opaque_instance(std::uint64_t seed, double r_s) {
  std::mt19937_64 rng(seed);
  const double L = 30.0 * r_s;
  std::vector<Obstacle> obstacles;
  std::vector<Box> taken;
  const int blocks = uniform_int(rng, 1, 3);
  for (int placed = 0, attempts = 0; placed < blocks && attempts < 1000; ++attempts) {
    const Point centre{uniform(rng, 4.0, L / r_s - 4.0) * r_s, uniform(rng, 4.0, L / r_s - 4.0) * r_s};
    Ring block = rotated_rect(centre, uniform(rng, 1.0, 5.0) * r_s, uniform(rng, 1.0, 5.0) * r_s,
                              uniform(rng, 0.0, std::numbers::pi));
    const Box b = ring_box(block, 3.0 * r_s);
    if (!clear_of(taken, b)) continue;
    taken.push_back(b);
    obstacles.push_back({Polygon(std::move(block)), ObstacleClass::Opaque});
    ++placed;
  }
  return Region(Polygon(rect(0, 0, L, L)), std::move(obstacles), r_s);
}

double land_area_oracle(const Region& region, int n) {
  std::vector<Polygon> obstacles;
  for (const Obstacle& o : region.obstacles()) obstacles.push_back(o.shape);
  return grid_area(region.bounding_box(), n, [&](Point p) {
    return inside(region.boundary(), p) && !inside(obstacles, p);
  });
}

}  // namespace hexcover::testing
