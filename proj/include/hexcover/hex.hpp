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

#pragma once

// Hexagonal tessellations of the plane.
//
// A tessellation is fixed by one cell centre (the origin) and an orientation:
// the angle between one of the cell's long diagonals and the +x axis. Cells
// are addressed by axial indices (q, r); the centre of (q, r) is
//
//     origin + q * u + r * v,   u = sqrt(3) r_s * dir(orientation + 30deg)
//                               v = sqrt(3) r_s * dir(orientation + 90deg)
//
// so the six edge neighbours of (q, r) are (q±1, r), (q, r±1), (q+1, r-1)
// and (q-1, r+1).

#include "hexcover/geom.hpp"

#include <array>
#include <compare>
#include <span>
#include <vector>

namespace hexcover {

struct AxialIndex {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const AxialIndex&, const AxialIndex&) = default;
};

std::array<AxialIndex, 6> edge_neighbours(AxialIndex a);
bool edge_adjacent(AxialIndex a, AxialIndex b);

/// Area of a regular hexagon of circumradius r_s: (3√3/2)·r_s².
double hexagon_area(double r_s);

/// Vertices (CCW) of the regular hexagon with the given centre, circumradius
/// and orientation.
std::array<Point, 6> hexagon_vertices(Point centre, double r_s, double orientation);
Polygon hexagon_polygon(Point centre, double r_s, double orientation);

/// True when p lies in the closed hexagon (within `slack`).
bool in_closed_hexagon(Point p, Point centre, double r_s, double orientation,
                       double slack = 0.0);

struct Hexagon {
  Point centre;
  AxialIndex index;
  Polygon polygon;
};

struct Shift {
  double dx = 0.0;
  double dy = 0.0;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

/// The candidate shift set L′: a triangular lattice of spacing r_s/depth,
/// aligned with the cell orientation, clipped to the closed cell. The zero
/// shift comes first, the rest are sorted lexicographically by (dx, dy); that
/// order breaks ties.
struct ShiftLattice {
  int depth = 1;
  std::vector<Shift> shifts;
};

/// Lattice geometry shared by every tessellation with the same r_s and
/// orientation.
class HexGrid {
 public:
  HexGrid(Point origin, double r_s, double orientation);

  Point origin() const { return origin_; }
  double sensing_radius() const { return r_s_; }
  double orientation() const { return orientation_; }
  Point u() const { return u_; }
  Point v() const { return v_; }

  Point centre(AxialIndex a) const;
  /// Fractional axial coordinates of a point.
  std::pair<double, double> axial(Point p) const;
  /// Index of the cell containing p (nearest centre).
  AxialIndex cell_of(Point p) const;

 private:
  Point origin_;
  double r_s_;
  double orientation_;
  Point u_;
  Point v_;
};

class Tessellation {
 public:
  Tessellation(HexGrid grid, Box bbox, std::vector<Hexagon> cells);

  const HexGrid& grid() const { return grid_; }
  Point origin() const { return grid_.origin(); }
  double orientation() const { return grid_.orientation(); }
  double sensing_radius() const { return grid_.sensing_radius(); }
  const Box& bbox() const { return bbox_; }
  const std::vector<Hexagon>& cells() const { return cells_; }

  /// Position of `a` in cells(), or -1.
  int find(AxialIndex a) const;

 private:
  HexGrid grid_;
  Box bbox_;
  std::vector<Hexagon> cells_;  // sorted by axial index
};

/// Cells of the tessellation whose interior meets the interior of `bbox`,
/// sorted by axial index. Throws ValidationError for r_s <= 0 or a
/// degenerate box.
Tessellation generate(const Box& bbox, double r_s, Point origin, double orientation);

/// Regenerates the tessellation with every centre displaced by the shift.
/// Indices keep their meaning: a cell present before and after moved by
/// exactly (dx, dy). Throws ValidationError if the shift leaves the closed
/// cell.
Tessellation apply_shift(const Tessellation& t, const Shift& l);

ShiftLattice shift_lattice(double r_s, int depth, double orientation = 0.0);

/// True when the shifted centre stays in the closed cell of its original
/// centre.
bool shift_in_cell(const Shift& l, double r_s, double orientation);

/// Full structural check used by tests and the CLI: every cell is a regular
/// hexagon of circumradius r_s, centres sit on the lattice, edge neighbours
/// are √3·r_s apart, the cells cover the bbox and pairwise overlaps vanish.
/// Returns an empty string on success, otherwise a description of the first
/// failure.
std::string validate_tessellation(const Tessellation& t, double area_tol);

}  // namespace hexcover
