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

#include "hexcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hexcover {

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return norm(a - b); }

Tolerances Tolerances::for_radius(double r_s) {
  return Tolerances{1e-9 * r_s, 1e-6 * r_s * r_s, 1e-6 * r_s};
}

namespace {

Ring open_ring(const BgPolygon::ring_type& r) {
  Ring out(r.begin(), r.end());
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

BgPolygon::ring_type closed_ring(std::span<const Point> r) {
  BgPolygon::ring_type out(r.begin(), r.end());
  if (!out.empty() && !(out.front() == out.back())) out.push_back(out.front());
  return out;
}

double snap_value(double v, double grid) { return std::round(v / grid) * grid; }

void snap_ring(BgPolygon::ring_type& r, double grid) {
  for (auto& p : r) {
    p.x = snap_value(p.x, grid);
    p.y = snap_value(p.y, grid);
  }
  r.erase(std::unique(r.begin(), r.end()), r.end());
}

// Removes vertices that sit on the line through their neighbours and the
// tips of needle-thin spikes (a reversal whose triangle is below
// `spike_area`). Boost.Geometry reports rings with such spikes as
// self-intersecting once the overlay has moved them by a rounding error.
void drop_degenerate_vertices(BgPolygon::ring_type& r, double grid, double spike_area) {
  if (r.size() < 4) return;
  std::vector<Point> open(r.begin(), r.end() - 1);
  for (bool changed = true; changed && open.size() >= 3;) {
    changed = false;
    for (std::size_t i = 0; i < open.size() && open.size() >= 3; ++i) {
      const Point prev = open[(i + open.size() - 1) % open.size()];
      const Point v = open[i];
      const Point next = open[(i + 1) % open.size()];
      const double twice = std::abs(cross(v - prev, next - prev));
      const double reach = std::max(distance(prev, v), distance(v, next));
      const bool collinear = twice <= 2.0 * grid * reach;
      const bool spike = dot(v - prev, next - v) < 0.0 && 0.5 * twice <= spike_area;
      if (collinear || spike) {
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  r.assign(open.begin(), open.end());
  if (!r.empty()) r.push_back(r.front());
}

void clean(BgMultiPolygon& m, double grid, double spike_area) {
  for (auto& poly : m) {
    snap_ring(poly.outer(), grid);
    drop_degenerate_vertices(poly.outer(), grid, spike_area);
    for (auto& h : poly.inners()) {
      snap_ring(h, grid);
      drop_degenerate_vertices(h, grid, spike_area);
    }
  }
}

BgMultiPolygon snapped(const BgMultiPolygon& m, double grid, double spike_area) {
  BgMultiPolygon out = m;
  clean(out, grid, spike_area);
  return out;
}

// Drops components and holes whose area is below `min_area`, and rings that
// collapsed to fewer than three distinct vertices.
void strip_slivers(BgMultiPolygon& m, double min_area) {
  auto degenerate = [&](const BgPolygon::ring_type& r) {
    return r.size() < 4 || std::abs(bg::area(r)) < min_area;
  };
  for (auto& poly : m) {
    auto& inners = poly.inners();
    inners.erase(std::remove_if(inners.begin(), inners.end(), degenerate),
                 inners.end());
  }
  m.erase(std::remove_if(m.begin(), m.end(),
                         [&](const BgPolygon& p) {
                           return degenerate(p.outer()) || bg::area(p) < min_area;
                         }),
          m.end());
}

bool strictly_separated(const std::optional<Box>& a, const std::optional<Box>& b) {
  if (!a || !b) return true;
  return a->max_corner().x < b->min_corner().x || b->max_corner().x < a->min_corner().x ||
         a->max_corner().y < b->min_corner().y || b->max_corner().y < a->min_corner().y;
}

std::optional<BgMultiPolygon> try_overlay(BooleanOp op, const BgMultiPolygon& a,
                                          const BgMultiPolygon& b, double grid,
                                          double min_area, bool snap_inputs) {
  BgMultiPolygon sa = snap_inputs ? snapped(a, grid, min_area) : a;
  BgMultiPolygon sb = snap_inputs ? snapped(b, grid, min_area) : b;
  BgMultiPolygon out;
  try {
    switch (op) {
      case BooleanOp::Union: bg::union_(sa, sb, out); break;
      case BooleanOp::Intersection: bg::intersection(sa, sb, out); break;
      case BooleanOp::Difference: bg::difference(sa, sb, out); break;
    }
  } catch (const bg::exception&) {
    return std::nullopt;
  }
  clean(out, grid, min_area);
  bg::correct(out);
  strip_slivers(out, min_area);
  if (!bg::is_valid(out)) return std::nullopt;
  return out;
}

const char* op_name(BooleanOp op) {
  switch (op) {
    case BooleanOp::Union: return "union";
    case BooleanOp::Intersection: return "intersection";
    case BooleanOp::Difference: return "difference";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(Ring outer, std::vector<Ring> holes) {
  validate_ring(outer, "outer ring");
  if (ring_area(outer) < 0) std::reverse(outer.begin(), outer.end());
  poly_.outer() = closed_ring(outer);
  for (std::size_t i = 0; i < holes.size(); ++i) {
    auto& h = holes[i];
    validate_ring(h, "hole " + std::to_string(i));
    if (ring_area(h) > 0) std::reverse(h.begin(), h.end());
    poly_.inners().push_back(closed_ring(h));
  }
  std::string reason;
  if (!bg::is_valid(poly_, reason)) {
    throw ValidationError("invalid polygon: " + reason);
  }
}

Polygon Polygon::from_boost(BgPolygon p) {
  Polygon out;
  out.poly_ = std::move(p);
  return out;
}

Ring Polygon::outer() const { return open_ring(poly_.outer()); }

std::vector<Ring> Polygon::holes() const {
  std::vector<Ring> out;
  out.reserve(poly_.inners().size());
  for (const auto& h : poly_.inners()) out.push_back(open_ring(h));
  return out;
}

double Polygon::area() const { return bg::area(poly_); }

Box Polygon::envelope() const { return bg::return_envelope<Box>(poly_); }

// ---------------------------------------------------------------------------
// PolygonSet

PolygonSet::PolygonSet(Polygon p) { multi_.push_back(p.boost()); }

PolygonSet::PolygonSet(std::vector<Polygon> polygons) {
  for (auto& p : polygons) multi_.push_back(p.boost());
}

PolygonSet PolygonSet::from_boost(BgMultiPolygon m) {
  PolygonSet s;
  s.multi_ = std::move(m);
  return s;
}

std::vector<Polygon> PolygonSet::polygons() const {
  std::vector<Polygon> out;
  out.reserve(multi_.size());
  for (const auto& p : multi_) out.push_back(Polygon::from_boost(p));
  return out;
}

std::optional<Box> PolygonSet::envelope() const {
  if (multi_.empty()) return std::nullopt;
  return bg::return_envelope<Box>(multi_);
}

// ---------------------------------------------------------------------------
// Measures

double ring_area(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double area(const Polygon& p) {
  double total = ring_area(p.outer());
  for (const auto& h : p.holes()) total += ring_area(h);
  return total;
}

double area(const PolygonSet& s) {
  double total = 0.0;
  for (const auto& p : s.boost()) total += bg::area(p);
  return std::max(0.0, total);
}

// ---------------------------------------------------------------------------
// Boolean operations

namespace {

Location locate_boost(Point p, const BgPolygon& poly, const Tolerances& tol);

Location locate_multi(Point p, const BgMultiPolygon& m, const Tolerances& tol) {
  Location best = Location::Exterior;
  for (const auto& poly : m) {
    const Location l = locate_boost(p, poly, tol);
    if (l == Location::Interior) return l;
    if (l == Location::Boundary) best = l;
  }
  return best;
}

// Midpoint of the widest span on a scanline a little off the middle of the
// component; cheap, and inside for any polygon that is not a sliver.
std::optional<Point> probe(const BgPolygon& poly) {
  const Box env = bg::return_envelope<Box>(poly);
  const double y = env.min_corner().y + 0.4937 * (env.max_corner().y - env.min_corner().y);
  std::vector<double> xs;
  auto scan = [&](const BgPolygon::ring_type& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      const Point a = r[i], b = r[i + 1];
      if ((a.y <= y) != (b.y <= y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  };
  scan(poly.outer());
  for (const auto& h : poly.inners()) scan(h);
  std::sort(xs.begin(), xs.end());
  std::optional<Point> best;
  double width = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    if (xs[i + 1] - xs[i] > width) {
      width = xs[i + 1] - xs[i];
      best = Point{0.5 * (xs[i] + xs[i + 1]), y};
    }
  }
  return best;
}

// Boost.Geometry occasionally misreads near-touching inputs and returns a
// valid but wrong overlay (for instance an empty intersection of a polygon
// that pokes out of a hexagon by 1e-10). Probing one point per component of
// the inputs and the output catches those cases.
bool consistent(BooleanOp op, const BgMultiPolygon& a, const BgMultiPolygon& b,
                const BgMultiPolygon& out, const Tolerances& tol) {
  auto check = [&](const BgMultiPolygon& source) {
    for (const auto& poly : source) {
      const auto p = probe(poly);
      if (!p) continue;
      const Location la = locate_multi(*p, a, tol);
      const Location lb = locate_multi(*p, b, tol);
      const Location lo = locate_multi(*p, out, tol);
      if (la == Location::Boundary || lb == Location::Boundary || lo == Location::Boundary) continue;
      const bool ia = la == Location::Interior, ib = lb == Location::Interior;
      bool expected = false;
      switch (op) {
        case BooleanOp::Union: expected = ia || ib; break;
        case BooleanOp::Intersection: expected = ia && ib; break;
        case BooleanOp::Difference: expected = ia && !ib; break;
      }
      if (expected != (lo == Location::Interior)) return false;
    }
    return true;
  };
  return check(a) && check(b) && check(out);
}

}  // namespace

namespace {

PolygonSet boolean_impl(BooleanOp op, const PolygonSet& a, const PolygonSet& b,
                        const Tolerances& tol, bool allow_split);

PolygonSet component(const BgPolygon& p) {
  BgMultiPolygon m{p};
  return PolygonSet::from_boost(std::move(m));
}

// Last resort when the whole-set overlay keeps failing: Boost.Geometry copes
// much better with one polygon at a time than with multipolygons whose
// components nearly touch.
std::optional<PolygonSet> split_overlay(BooleanOp op, const PolygonSet& a, const PolygonSet& b,
                                        const Tolerances& tol) {
  const auto& pa = a.boost();
  const auto& pb = b.boost();
  switch (op) {
    case BooleanOp::Union: {
      if (pa.size() + pb.size() < 3) return std::nullopt;
      PolygonSet acc = component(pa.front());
      for (std::size_t i = 1; i < pa.size(); ++i) {
        acc = boolean_impl(op, acc, component(pa[i]), tol, false);
      }
      for (const auto& p : pb) acc = boolean_impl(op, acc, component(p), tol, false);
      return acc;
    }
    case BooleanOp::Intersection: {
      const auto& many = pb.size() > 1 ? pb : pa;
      const PolygonSet& other = pb.size() > 1 ? a : b;
      if (many.size() < 2) return std::nullopt;
      PolygonSet acc;
      for (const auto& p : many) {
        acc = boolean_impl(BooleanOp::Union, acc,
                           boolean_impl(op, other, component(p), tol, false), tol, false);
      }
      return acc;
    }
    case BooleanOp::Difference: {
      if (pb.size() > 1) {
        PolygonSet acc = a;
        for (const auto& p : pb) acc = boolean_impl(op, acc, component(p), tol, false);
        return acc;
      }
      if (pa.size() < 2) return std::nullopt;
      PolygonSet acc;
      for (const auto& p : pa) {
        acc = boolean_impl(BooleanOp::Union, acc, boolean_impl(op, component(p), b, tol, false),
                           tol, false);
      }
      return acc;
    }
  }
  return std::nullopt;
}

PolygonSet boolean_impl(BooleanOp op, const PolygonSet& a, const PolygonSet& b,
                        const Tolerances& tol, bool allow_split) {
  switch (op) {
    case BooleanOp::Union:
      if (a.empty()) return b;
      if (b.empty()) return a;
      break;
    case BooleanOp::Intersection:
      if (a.empty() || b.empty()) return {};
      if (strictly_separated(a.envelope(), b.envelope())) return {};
      break;
    case BooleanOp::Difference:
      if (a.empty()) return {};
      if (b.empty()) return a;
      if (strictly_separated(a.envelope(), b.envelope())) return a;
      break;
  }
  if (op == BooleanOp::Union && strictly_separated(a.envelope(), b.envelope())) {
    BgMultiPolygon m = a.boost();
    m.insert(m.end(), b.boost().begin(), b.boost().end());
    return PolygonSet::from_boost(std::move(m));
  }

  // Exact inputs first, then inputs snapped to successively coarser grids
  // whenever the overlay throws, comes out invalid or fails the probe check.
  double grid = tol.snap;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const bool snap_inputs = attempt > 0;
    if (attempt > 1) grid *= 1000.0;
    auto out = try_overlay(op, a.boost(), b.boost(), grid, tol.area, snap_inputs);
    if (out && consistent(op, a.boost(), b.boost(), *out, tol)) {
      return PolygonSet::from_boost(std::move(*out));
    }
  }
  if (allow_split) {
    if (auto out = split_overlay(op, a, b, tol)) return std::move(*out);
  }
  std::ostringstream msg;
  msg << "polygon " << op_name(op) << " failed after snap-rounding retries ("
      << a.size() << " and " << b.size() << " components)";
  throw GeometryError(msg.str());
}

}  // namespace

PolygonSet boolean(BooleanOp op, const PolygonSet& a, const PolygonSet& b,
                   const Tolerances& tol) {
  return boolean_impl(op, a, b, tol, true);
}

PolygonSet set_union(const PolygonSet& a, const PolygonSet& b, const Tolerances& tol) {
  return boolean(BooleanOp::Union, a, b, tol);
}
PolygonSet set_intersection(const PolygonSet& a, const PolygonSet& b,
                            const Tolerances& tol) {
  return boolean(BooleanOp::Intersection, a, b, tol);
}
PolygonSet set_difference(const PolygonSet& a, const PolygonSet& b,
                          const Tolerances& tol) {
  return boolean(BooleanOp::Difference, a, b, tol);
}

PolygonSet union_all(std::span<const PolygonSet> parts, const Tolerances& tol) {
  if (parts.empty()) return {};
  std::vector<PolygonSet> level(parts.begin(), parts.end());
  while (level.size() > 1) {
    std::vector<PolygonSet> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(set_union(level[i], level[i + 1], tol));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

// ---------------------------------------------------------------------------
// Point location

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

namespace {

double ring_distance(Point p, const BgPolygon::ring_type& r) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    best = std::min(best, distance_to_segment(p, r[i], r[i + 1]));
  }
  return best;
}

Location locate_boost(Point p, const BgPolygon& poly, const Tolerances& tol) {
  const Box env = bg::return_envelope<Box>(poly);
  if (p.x < env.min_corner().x - tol.band || p.x > env.max_corner().x + tol.band ||
      p.y < env.min_corner().y - tol.band || p.y > env.max_corner().y + tol.band) {
    return Location::Exterior;
  }
  double d = ring_distance(p, poly.outer());
  for (const auto& h : poly.inners()) d = std::min(d, ring_distance(p, h));
  if (d <= tol.band) return Location::Boundary;
  return bg::within(p, poly) ? Location::Interior : Location::Exterior;
}

}  // namespace

Location locate(Point p, const Polygon& poly, const Tolerances& tol) {
  return locate_boost(p, poly.boost(), tol);
}

Location locate(Point p, const PolygonSet& s, const Tolerances& tol) {
  Location best = Location::Exterior;
  for (const auto& poly : s.boost()) {
    const Location l = locate_boost(p, poly, tol);
    if (l == Location::Interior) return l;
    if (l == Location::Boundary) best = l;
  }
  return best;
}

Point interior_point(const Polygon& poly) {
  const BgPolygon& bp = poly.boost();
  const Box env = bg::return_envelope<Box>(bp);
  const double y0 = env.min_corner().y;
  const double h = env.max_corner().y - y0;

  std::vector<const BgPolygon::ring_type*> rings{&bp.outer()};
  for (const auto& r : bp.inners()) rings.push_back(&r);

  Point best{};
  double best_score = -1.0;
  constexpr int kScans = 33;
  for (int k = 1; k < kScans; ++k) {
    const double y = y0 + h * k / kScans;
    std::vector<double> xs;
    for (const auto* r : rings) {
      for (std::size_t i = 0; i + 1 < r->size(); ++i) {
        const Point a = (*r)[i];
        const Point b = (*r)[i + 1];
        if ((a.y <= y) != (b.y <= y)) {
          xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const Point mid{0.5 * (xs[i] + xs[i + 1]), y};
      double clearance = std::numeric_limits<double>::infinity();
      for (const auto* r : rings) clearance = std::min(clearance, ring_distance(mid, *r));
      if (clearance > best_score && bg::within(mid, bp)) {
        best_score = clearance;
        best = mid;
      }
    }
  }
  if (best_score <= 0.0) {
    Point c;
    bg::centroid(bp, c);
    return c;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Convex clipping

Ring clip_to_convex(std::span<const Point> subject, std::span<const Point> convex) {
  Ring out(subject.begin(), subject.end());
  const std::size_t m = convex.size();
  for (std::size_t e = 0; e < m && !out.empty(); ++e) {
    const Point a = convex[e];
    const Point b = convex[(e + 1) % m];
    const Point ab = b - a;
    Ring in = std::move(out);
    out.clear();
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point p = in[i];
      const Point q = in[(i + 1) % n];
      const double sp = cross(ab, p - a);
      const double sq = cross(ab, q - a);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) {
        const double t = sp / (sp - sq);
        out.push_back(p + t * (q - p));
      }
    }
  }
  return out;
}

double clipped_area(const PolygonSet& s, std::span<const Point> convex) {
  const Box cb = ring_envelope(convex);
  double total = 0.0;
  for (const auto& poly : s.boost()) {
    if (!boxes_overlap(bg::return_envelope<Box>(poly), cb)) continue;
    total += ring_area(clip_to_convex(open_ring(poly.outer()), convex));
    for (const auto& h : poly.inners()) {
      total += ring_area(clip_to_convex(open_ring(h), convex));
    }
  }
  return std::max(0.0, total);
}

bool convex_rings_overlap(std::span<const Point> a, std::span<const Point> b, double tol) {
  auto separated_on = [&](std::span<const Point> edges) {
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point e = edges[(i + 1) % n] - edges[i];
      const Point axis{-e.y, e.x};
      double amin = INFINITY, amax = -INFINITY, bmin = INFINITY, bmax = -INFINITY;
      for (const Point& p : a) {
        const double d = dot(axis, p);
        amin = std::min(amin, d);
        amax = std::max(amax, d);
      }
      for (const Point& p : b) {
        const double d = dot(axis, p);
        bmin = std::min(bmin, d);
        bmax = std::max(bmax, d);
      }
      const double slack = tol * norm(axis);
      if (amax <= bmin + slack || bmax <= amin + slack) return true;
    }
    return false;
  };
  return !separated_on(a) && !separated_on(b);
}

bool boxes_overlap(const Box& a, const Box& b) {
  return !(a.max_corner().x < b.min_corner().x || b.max_corner().x < a.min_corner().x ||
           a.max_corner().y < b.min_corner().y || b.max_corner().y < a.min_corner().y);
}

Box ring_envelope(std::span<const Point> ring) {
  Box b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
        {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (const Point& p : ring) {
    b.min_corner().x = std::min(b.min_corner().x, p.x);
    b.min_corner().y = std::min(b.min_corner().y, p.y);
    b.max_corner().x = std::max(b.max_corner().x, p.x);
    b.max_corner().y = std::max(b.max_corner().y, p.y);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Validation

void validate_ring(std::span<const Point> ring, const std::string& what) {
  std::size_t n = ring.size();
  if (n > 1 && ring.front() == ring.back()) --n;
  if (n < 3) throw ValidationError(what + ": fewer than 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(ring[i].x) || !std::isfinite(ring[i].y)) {
      throw ValidationError(what + ": non-finite coordinate");
    }
  }
  const auto open = ring.first(n);
  if (ring_area(open) == 0.0) throw ValidationError(what + ": zero area");

  // Pairwise proper-or-touching intersection of non-adjacent edges.
  auto orient = [](Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
  };
  auto on_segment = [](Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = open[i], b = open[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point c = open[j], d = open[(j + 1) % n];
      const int o1 = orient(a, b, c), o2 = orient(a, b, d);
      const int o3 = orient(c, d, a), o4 = orient(c, d, b);
      const bool hit = (o1 != o2 && o3 != o4) || (o1 == 0 && on_segment(a, b, c)) ||
                       (o2 == 0 && on_segment(a, b, d)) ||
                       (o3 == 0 && on_segment(c, d, a)) ||
                       (o4 == 0 && on_segment(c, d, b));
      if (hit) {
        std::ostringstream msg;
        msg << what << ": self-intersection between edges " << i << " and " << j;
        throw ValidationError(msg.str());
      }
    }
  }
}

}  // namespace hexcover
