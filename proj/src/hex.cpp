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

#include "hexcover/hex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hexcover {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

Point direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

std::array<Point, 4> box_ring(const Box& b) {
  return {Point{b.min_corner().x, b.min_corner().y}, Point{b.max_corner().x, b.min_corner().y},
          Point{b.max_corner().x, b.max_corner().y}, Point{b.min_corner().x, b.max_corner().y}};
}

}  // namespace

std::array<AxialIndex, 6> edge_neighbours(AxialIndex a) {
  return {AxialIndex{a.q + 1, a.r}, AxialIndex{a.q, a.r + 1}, AxialIndex{a.q - 1, a.r + 1},
          AxialIndex{a.q - 1, a.r}, AxialIndex{a.q, a.r - 1}, AxialIndex{a.q + 1, a.r - 1}};
}

bool edge_adjacent(AxialIndex a, AxialIndex b) {
  const int dq = b.q - a.q, dr = b.r - a.r;
  const int ds = -dq - dr;
  return std::max({std::abs(dq), std::abs(dr), std::abs(ds)}) == 1;
}

double hexagon_area(double r_s) { return 1.5 * kSqrt3 * r_s * r_s; }

std::array<Point, 6> hexagon_vertices(Point centre, double r_s, double orientation) {
  std::array<Point, 6> out;
  for (int k = 0; k < 6; ++k) {
    out[k] = centre + r_s * direction(orientation + k * kPi / 3.0);
  }
  return out;
}

Polygon hexagon_polygon(Point centre, double r_s, double orientation) {
  const auto v = hexagon_vertices(centre, r_s, orientation);
  return Polygon::from_boost(BgPolygon{{v[0], v[1], v[2], v[3], v[4], v[5], v[0]}});
}

bool in_closed_hexagon(Point p, Point centre, double r_s, double orientation, double slack) {
  const Point local = rotate(p - centre, -orientation);
  const double ay = std::abs(local.y);
  return ay <= 0.5 * kSqrt3 * r_s + slack &&
         kSqrt3 * std::abs(local.x) + ay <= kSqrt3 * r_s + 2.0 * slack;
}

// ---------------------------------------------------------------------------
// HexGrid

HexGrid::HexGrid(Point origin, double r_s, double orientation)
    : origin_(origin),
      r_s_(r_s),
      orientation_(orientation),
      u_(kSqrt3 * r_s * direction(orientation + kPi / 6.0)),
      v_(kSqrt3 * r_s * direction(orientation + kPi / 2.0)) {}

Point HexGrid::centre(AxialIndex a) const {
  return {origin_.x + a.q * u_.x + a.r * v_.x, origin_.y + a.q * u_.y + a.r * v_.y};
}

std::pair<double, double> HexGrid::axial(Point p) const {
  const Point d = p - origin_;
  const double det = cross(u_, v_);
  return {cross(d, v_) / det, cross(u_, d) / det};
}

AxialIndex HexGrid::cell_of(Point p) const {
  const auto [fq, fr] = axial(p);
  const double fs = -fq - fr;
  double q = std::round(fq), r = std::round(fr), s = std::round(fs);
  const double dq = std::abs(q - fq), dr = std::abs(r - fr), ds = std::abs(s - fs);
  if (dq > dr && dq > ds) {
    q = -r - s;
  } else if (dr > ds) {
    r = -q - s;
  }
  return {static_cast<int>(q), static_cast<int>(r)};
}

// ---------------------------------------------------------------------------
// Tessellation

Tessellation::Tessellation(HexGrid grid, Box bbox, std::vector<Hexagon> cells)
    : grid_(grid), bbox_(bbox), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [](const Hexagon& a, const Hexagon& b) { return a.index < b.index; });
}

int Tessellation::find(AxialIndex a) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), a,
                             [](const Hexagon& h, AxialIndex k) { return h.index < k; });
  if (it == cells_.end() || it->index != a) return -1;
  return static_cast<int>(it - cells_.begin());
}

Tessellation generate(const Box& bbox, double r_s, Point origin, double orientation) {
  if (!(r_s > 0.0) || !std::isfinite(r_s)) throw ValidationError("r_s must be positive");
  const double w = bbox.max_corner().x - bbox.min_corner().x;
  const double h = bbox.max_corner().y - bbox.min_corner().y;
  if (!(w > 0.0) || !(h > 0.0)) throw ValidationError("bounding box is degenerate");

  const HexGrid grid(origin, r_s, orientation);
  const Point lo{bbox.min_corner().x - r_s, bbox.min_corner().y - r_s};
  const Point hi{bbox.max_corner().x + r_s, bbox.max_corner().y + r_s};
  double qmin = INFINITY, qmax = -INFINITY, rmin = INFINITY, rmax = -INFINITY;
  for (Point c : {lo, hi, Point{lo.x, hi.y}, Point{hi.x, lo.y}}) {
    const auto [q, r] = grid.axial(c);
    qmin = std::min(qmin, q);
    qmax = std::max(qmax, q);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }

  const auto box = box_ring(bbox);
  const double tol = 1e-12 * r_s;
  std::vector<Hexagon> cells;
  for (int q = static_cast<int>(std::floor(qmin)) - 1; q <= static_cast<int>(std::ceil(qmax)) + 1; ++q) {
    for (int r = static_cast<int>(std::floor(rmin)) - 1; r <= static_cast<int>(std::ceil(rmax)) + 1; ++r) {
      const AxialIndex idx{q, r};
      const Point c = grid.centre(idx);
      if (c.x < lo.x || c.x > hi.x || c.y < lo.y || c.y > hi.y) continue;
      const auto verts = hexagon_vertices(c, r_s, orientation);
      if (!convex_rings_overlap(verts, box, tol)) continue;
      cells.push_back({c, idx, hexagon_polygon(c, r_s, orientation)});
    }
  }
  return Tessellation(grid, bbox, std::move(cells));
}

bool shift_in_cell(const Shift& l, double r_s, double orientation) {
  return in_closed_hexagon({l.dx, l.dy}, {0.0, 0.0}, r_s, orientation, 1e-9 * r_s);
}

Tessellation apply_shift(const Tessellation& t, const Shift& l) {
  if (!shift_in_cell(l, t.sensing_radius(), t.orientation())) {
    std::ostringstream msg;
    msg << "shift (" << l.dx << ", " << l.dy << ") leaves the closed cell";
    throw ValidationError(msg.str());
  }
  const Point o = t.origin();
  return generate(t.bbox(), t.sensing_radius(), {o.x + l.dx, o.y + l.dy}, t.orientation());
}

ShiftLattice shift_lattice(double r_s, int depth, double orientation) {
  if (depth < 1) throw ValidationError("shift lattice depth must be >= 1");
  // Coefficients are formed as i/depth so that lattice(d) ⊆ lattice(2d)
  // holds bit-for-bit.
  const Point a = r_s * direction(orientation);
  const Point b = r_s * direction(orientation + kPi / 3.0);
  ShiftLattice out;
  out.depth = depth;
  const int span = 2 * depth;
  for (int i = -span; i <= span; ++i) {
    for (int j = -span; j <= span; ++j) {
      const double fi = static_cast<double>(i) / depth;
      const double fj = static_cast<double>(j) / depth;
      const Shift s{fi * a.x + fj * b.x, fi * a.y + fj * b.y};
      if (shift_in_cell(s, r_s, orientation)) out.shifts.push_back(s);
    }
  }
  std::sort(out.shifts.begin(), out.shifts.end());
  // The zero shift leads the order so that a cluster with nothing to gain
  // keeps its unshifted centres.
  const auto zero = std::find(out.shifts.begin(), out.shifts.end(), Shift{0.0, 0.0});
  std::rotate(out.shifts.begin(), zero, zero + 1);
  return out;
}

std::string validate_tessellation(const Tessellation& t, double area_tol) {
  const double r_s = t.sensing_radius();
  const HexGrid& g = t.grid();
  const auto& cells = t.cells();
  const double len_tol = 1e-9 * r_s * std::max(1.0, norm(t.origin()) / r_s + 1.0);
  std::ostringstream err;

  if (cells.empty()) return "tessellation has no cells";
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (!(cells[i - 1].index < cells[i].index)) return "cells not in canonical order";
  }

  const auto box = box_ring(t.bbox());
  double covered = 0.0;
  for (const auto& cell : cells) {
    if (distance(cell.centre, g.centre(cell.index)) > len_tol) {
      err << "cell (" << cell.index.q << "," << cell.index.r << ") centre off lattice";
      return err.str();
    }
    const Ring ring = cell.polygon.outer();
    if (ring.size() != 6) return "cell is not a hexagon";
    for (std::size_t k = 0; k < 6; ++k) {
      if (std::abs(distance(ring[k], cell.centre) - r_s) > len_tol) {
        return "cell vertex not at circumradius";
      }
      const Point prev = ring[(k + 5) % 6] - ring[k];
      const Point next = ring[(k + 1) % 6] - ring[k];
      const double angle = std::acos(std::clamp(dot(prev, next) / (norm(prev) * norm(next)), -1.0, 1.0));
      if (std::abs(angle - 2.0 * kPi / 3.0) > 1e-9) return "cell interior angle is not 120 degrees";
    }
    if (!convex_rings_overlap(ring, box, 1e-12 * r_s)) return "cell does not meet the bbox";
    for (const AxialIndex n : edge_neighbours(cell.index)) {
      const int j = t.find(n);
      if (j < 0) continue;
      if (std::abs(distance(cells[j].centre, cell.centre) - kSqrt3 * r_s) > len_tol) {
        return "adjacent centres are not sqrt(3) r_s apart";
      }
    }
    covered += ring_area(clip_to_convex(ring, box));
  }

  // Only cells whose centres are closer than 2 r_s can overlap at all.
  double overlap = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Ring ri = cells[i].polygon.outer();
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (distance(cells[i].centre, cells[j].centre) >= 2.0 * r_s) continue;
      overlap += std::max(0.0, ring_area(clip_to_convex(cells[j].polygon.outer(), ri)));
    }
  }
  const double box_area = bg::area(t.bbox());
  if (overlap > area_tol * static_cast<double>(cells.size())) {
    err << "cells overlap (total " << overlap << ")";
    return err.str();
  }
  if (std::abs(covered - box_area) > area_tol) {
    err << "cells do not tile the bbox (covered " << covered << " of " << box_area << ")";
    return err.str();
  }
  return {};
}

}  // namespace hexcover
