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

#include "hexcover/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace hexcover {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

double angle_of(Point d) { return wrap_angle(std::atan2(d.y, d.x)); }

Point dir(double a) { return {std::cos(a), std::sin(a)}; }

struct Line {
  Point p;
  Point w;
};

// Point where the ray from x along angle a meets the line.
Point ray_line(Point x, double a, const Line& line) {
  const Point d = dir(a);
  const double denom = cross(d, line.w);
  if (std::abs(denom) < 1e-300) return line.p;
  const double t = cross(line.p - x, line.w) / denom;
  return x + std::max(0.0, t) * d;
}

// Clips segment [p, q] to a convex CCW ring; nullopt if nothing remains.
std::optional<std::pair<Point, Point>> clip_segment(Point p, Point q, const Ring& convex) {
  double s0 = 0.0, s1 = 1.0;
  const Point w = q - p;
  const std::size_t n = convex.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point e = convex[(k + 1) % n] - convex[k];
    const double f0 = cross(e, p - convex[k]);
    const double fw = cross(e, w);
    if (std::abs(fw) < 1e-300) {
      if (f0 < 0) return std::nullopt;
      continue;
    }
    const double s = -f0 / fw;
    if (fw > 0) {
      s0 = std::max(s0, s);
    } else {
      s1 = std::min(s1, s);
    }
    if (s0 > s1) return std::nullopt;
  }
  return std::make_pair(p + s0 * w, p + s1 * w);
}

bool strictly_within_ccw_sector(double from, double to, double a) {
  const double span = wrap_angle(to - from);
  const double off = wrap_angle(a - from);
  return off > 0.0 && off < span;
}

}  // namespace

// ---------------------------------------------------------------------------
// SegmentSet

SegmentSet SegmentSet::from_polygons(const PolygonSet& occluders) {
  SegmentSet s;
  auto add_ring = [&](const BgPolygon::ring_type& r) {
    // Closed ring: r.back() == r.front(). Boost orientation here is outer CCW
    // and holes CW, so the solid side is always to the left.
    const std::size_t n = r.size() - 1;
    const std::size_t base = s.edges_.size();
    for (std::size_t i = 0; i < n; ++i) {
      s.edges_.push_back({r[i], r[i + 1], base + (i + 1) % n});
    }
  };
  for (const auto& poly : occluders.boost()) {
    add_ring(poly.outer());
    for (const auto& h : poly.inners()) add_ring(h);
  }
  return s;
}

bool SegmentSet::strictly_inside(Point p, double tol) const {
  bool inside = false;
  for (const auto& e : edges_) {
    if (distance_to_segment(p, e.a, e.b) <= tol) return false;
    if ((e.a.y > p.y) != (e.b.y > p.y)) {
      const double xc = e.a.x + (p.y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
      if (xc > p.x) inside = !inside;
    }
  }
  return inside;
}

SegmentSet occluders_of(const Region& region) {
  return SegmentSet::from_polygons(region.opaque_union());
}

Ring disk_ngon(Point centre, double radius, int ngon, double phase) {
  Ring out;
  out.reserve(static_cast<std::size_t>(ngon));
  for (int k = 0; k < ngon; ++k) {
    out.push_back(centre + radius * dir(phase + kTwoPi * k / ngon));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

Polygon visibility_polygon(Point x, const SegmentSet& occluders, double horizon, int ngon,
                           double phase) {
  if (ngon < 3) throw ValidationError("ngon must be at least 3");
  const double tol = 1e-9 * horizon;
  if (occluders.strictly_inside(x, tol)) {
    throw PlacementError("sensor position lies inside an opaque obstacle");
  }

  const Ring disk = disk_ngon(x, horizon, ngon, phase);
  const auto& edges = occluders.edges();

  // Edges through x decide which directions are solid right at x.
  struct Incidence {
    std::size_t edge;
    bool at_end;  // x coincides with edge.b
  };
  std::vector<Incidence> incident;
  std::vector<Line> candidates;
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(ngon) + 4 * edges.size());
  for (int k = 0; k < ngon; ++k) angles.push_back(wrap_angle(phase + kTwoPi * k / ngon));

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const double d = distance_to_segment(x, e.a, e.b);
    if (d > horizon) continue;
    if (d <= tol) {
      const bool at_a = distance(x, e.a) <= tol;
      const bool at_b = distance(x, e.b) <= tol;
      if (at_b) {
        incident.push_back({i, true});
      } else if (!at_a) {
        incident.push_back({i, false});
      }
      if (!at_a) angles.push_back(angle_of(e.a - x));
      if (!at_b) angles.push_back(angle_of(e.b - x));
      continue;
    }
    const auto clipped = clip_segment(e.a, e.b, disk);
    if (!clipped) continue;
    const auto [p, q] = *clipped;
    if (distance(p, q) <= tol) continue;
    candidates.push_back({p, q - p});
    angles.push_back(angle_of(p - x));
    angles.push_back(angle_of(q - x));
  }

  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return b - a < 1e-13; }),
               angles.end());
  if (angles.size() > 1 && angles.back() - angles.front() > kTwoPi - 1e-13) angles.pop_back();

  auto blocked_at_x = [&](double a) {
    for (const auto& inc : incident) {
      const auto& e = edges[inc.edge];
      if (inc.at_end) {
        const auto& out = edges[e.next];
        if (strictly_within_ccw_sector(angle_of(out.b - out.a), angle_of(e.a - e.b), a)) {
          return true;
        }
      } else if (cross(e.b - e.a, dir(a)) > 0.0) {
        return true;
      }
    }
    return false;
  };

  const double sector = kTwoPi / ngon;
  auto horizon_line = [&](double a) {
    const int k = static_cast<int>(std::floor(wrap_angle(a - phase) / sector)) % ngon;
    const Point p = disk[static_cast<std::size_t>(k)];
    const Point q = disk[static_cast<std::size_t>((k + 1) % ngon)];
    return Line{p, q - p};
  };

  Ring ring;
  const std::size_t m = angles.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a0 = angles[i];
    const double a1 = (i + 1 < m) ? angles[i + 1] : angles[0] + kTwoPi;
    const double mid = 0.5 * (a0 + a1);
    if (blocked_at_x(mid)) {
      ring.push_back(x);
      continue;
    }
    const Point d = dir(mid);
    Line best = horizon_line(mid);
    double best_t = cross(best.p - x, best.w) / cross(d, best.w);
    for (const auto& c : candidates) {
      const double denom = cross(d, c.w);
      if (std::abs(denom) < 1e-300) continue;
      const double t = cross(c.p - x, c.w) / denom;
      const double s = cross(c.p - x, d) / denom;
      if (t > 0.0 && t < best_t && s >= -1e-12 && s <= 1.0 + 1e-12) {
        best_t = t;
        best = c;
      }
    }
    ring.push_back(ray_line(x, a0, best));
    ring.push_back(ray_line(x, a1, best));
  }

  Ring clean;
  for (const Point& p : ring) {
    if (clean.empty() || distance(clean.back(), p) > 1e-12 * horizon) clean.push_back(p);
  }
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= 1e-12 * horizon) {
    clean.pop_back();
  }
  BgPolygon poly;
  poly.outer().assign(clean.begin(), clean.end());
  if (!clean.empty()) poly.outer().push_back(clean.front());
  bg::correct(poly);
  return Polygon::from_boost(std::move(poly));
}

RspPolygon rsp(Point x, const Region& region, int ngon, double phase) {
  if (ngon < 12) throw ValidationError("rsp needs ngon >= 12");
  if (!region.accessible(x)) throw PlacementError("sensor position is not on accessible land");
  const Tolerances& tol = region.tolerances();
  const Polygon vis =
      visibility_polygon(x, occluders_of(region), region.sensing_radius(), ngon, phase);
  return {x, set_intersection(PolygonSet(vis), region.land(), tol), ngon};
}

}  // namespace hexcover
