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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace hexcover;

namespace {

std::set<std::pair<long long, long long>> centre_set(const Tessellation& t, double grid) {
  std::set<std::pair<long long, long long>> out;
  for (const auto& c : t.cells()) out.insert({std::llround(c.centre.x / grid), std::llround(c.centre.y / grid)});
  return out;
}

}  // namespace

TEST_CASE("cell count on a 20 x 20 box") {
  // Golden value from a brute-force enumeration over an inflated axial
  // window, keeping cells whose overlap with the box has positive area.
  const Tessellation t = generate({{0, 0}, {20, 20}}, 1.0, {0, 0}, 0.0);
  CHECK(t.cells().size() == 175);
  CHECK(validate_tessellation(t, 1e-6).empty());
}

TEST_CASE("tiny box inside one cell") {
  const Tessellation t = generate({{-0.01, -0.01}, {0.01, 0.01}}, 1.0, {0, 0}, 0.0);
  REQUIRE(t.cells().size() == 1);
  CHECK(t.cells()[0].index == AxialIndex{0, 0});
}

TEST_CASE("60 degree rotation gives the same centres") {
  const Box box{{-3, -2}, {7, 9}};
  const Tessellation a = generate(box, 1.3, {0.4, 0.2}, 0.0);
  const Tessellation b = generate(box, 1.3, {0.4, 0.2}, std::numbers::pi / 3.0);
  CHECK(centre_set(a, 1e-9) == centre_set(b, 1e-9));
}

TEST_CASE("cell geometry") {
  const Tessellation t = generate({{0, 0}, {5, 5}}, 2.0, {1, 1}, 0.3);
  CHECK(validate_tessellation(t, 1e-6).empty());
  for (const auto& c : t.cells()) {
    for (const Point v : c.polygon.outer()) CHECK(distance(v, c.centre) == doctest::Approx(2.0));
  }
  CHECK(std::is_sorted(t.cells().begin(), t.cells().end(),
                       [](const Hexagon& a, const Hexagon& b) { return a.index < b.index; }));
}

TEST_CASE("generate rejects bad input") {
  CHECK_THROWS_AS(generate({{0, 0}, {1, 1}}, 0.0, {0, 0}, 0.0), ValidationError);
  CHECK_THROWS_AS(generate({{0, 0}, {0, 1}}, 1.0, {0, 0}, 0.0), ValidationError);
}

TEST_CASE("shift lattice sizes") {
  const ShiftLattice d1 = shift_lattice(1.0, 1);
  CHECK(d1.shifts.size() == 7);
  int at_vertex = 0;
  for (const Shift& s : d1.shifts) at_vertex += std::abs(std::hypot(s.dx, s.dy) - 1.0) < 1e-12;
  CHECK(at_vertex == 6);
  // Enumeration oracle over the triangular lattice clipped to the closed
  // hexagon: 3d^2 + 3d + 1 points.
  CHECK(shift_lattice(1.0, 2).shifts.size() == 19);
  CHECK(shift_lattice(1.0, 4).shifts.size() == 61);
  CHECK(shift_lattice(1.0, 8).shifts.size() == 217);
  CHECK_THROWS_AS(shift_lattice(1.0, 0), ValidationError);
}

TEST_CASE("shift lattice invariants") {
  for (const double orientation : {0.0, 0.4}) {
    const ShiftLattice l = shift_lattice(1.7, 4, orientation);
    REQUIRE(!l.shifts.empty());
    CHECK(l.shifts.front() == Shift{0.0, 0.0});
    CHECK(std::is_sorted(l.shifts.begin() + 1, l.shifts.end()));
    CHECK(std::adjacent_find(l.shifts.begin() + 1, l.shifts.end()) == l.shifts.end());
    CHECK(std::count(l.shifts.begin(), l.shifts.end(), Shift{0.0, 0.0}) == 1);
    for (const Shift& s : l.shifts) CHECK(shift_in_cell(s, 1.7, orientation));
    // Nesting: every point of depth 4 is in depth 8, bit for bit.
    const ShiftLattice fine = shift_lattice(1.7, 8, orientation);
    for (const Shift& s : l.shifts) {
      CHECK(std::find(fine.shifts.begin(), fine.shifts.end(), s) != fine.shifts.end());
    }
  }
}

TEST_CASE("apply_shift") {
  const Tessellation t = generate({{0, 0}, {10, 6}}, 1.0, {0, 0}, 0.0);
  const Tessellation same = apply_shift(t, {0.0, 0.0});
  CHECK(centre_set(same, 1e-12) == centre_set(t, 1e-12));

  std::mt19937_64 rng(1);
  const ShiftLattice lattice = shift_lattice(1.0, 4);
  for (int i = 0; i < 20; ++i) {
    const Shift s = lattice.shifts[rng() % lattice.shifts.size()];
    const Tessellation shifted = apply_shift(t, s);
    CHECK(validate_tessellation(shifted, 1e-6).empty());
    const Point o = shifted.origin();
    CHECK(o.x == doctest::Approx(s.dx));
    CHECK(o.y == doctest::Approx(s.dy));
  }
  CHECK_THROWS_AS(apply_shift(t, {1.5, 0.0}), ValidationError);
}

TEST_CASE("translation by a lattice vector maps the centres onto themselves") {
  // With orientation 30 degrees the lattice contains (sqrt(3) r_s, 0).
  const double orientation = std::numbers::pi / 6.0;
  const Box box{{0, 0}, {12, 9}};
  const Tessellation a = generate(box, 1.0, {0, 0}, orientation);
  const Tessellation b = generate(box, 1.0, {std::numbers::sqrt3, 0.0}, orientation);
  CHECK(centre_set(a, 1e-9) == centre_set(b, 1e-9));
}

TEST_CASE("cell_of finds the containing cell") {
  const HexGrid g({0.3, -0.2}, 1.5, 0.2);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> pos(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const Point p{pos(rng), pos(rng)};
    CHECK(in_closed_hexagon(p, g.centre(g.cell_of(p)), 1.5, 0.2, 1e-9));
  }
}

TEST_CASE("edge adjacency") {
  const AxialIndex a{2, -1};
  for (const AxialIndex n : edge_neighbours(a)) CHECK(edge_adjacent(a, n));
  CHECK_FALSE(edge_adjacent(a, {4, -2}));
  CHECK_FALSE(edge_adjacent(a, a));
  // Axial neighbours are exactly the cells sqrt(3) r_s away.
  const HexGrid g({0, 0}, 1.0, 0.0);
  for (const AxialIndex n : edge_neighbours(a)) {
    CHECK(distance(g.centre(a), g.centre(n)) == doctest::Approx(std::numbers::sqrt3));
  }
}
