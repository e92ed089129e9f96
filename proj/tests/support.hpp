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

// Test-side oracles and instance generators. The oracles here use their own
// point-in-polygon code so they stay independent of the library's kernel.

#include "hexcover/region.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hexcover::testing {

/// Even-odd crossing test over the outer ring and holes.
bool inside(const Polygon& poly, Point p);
bool inside(const std::vector<Polygon>& polys, Point p);

/// Closed flat-top hexagon of circumradius r about c.
bool in_hexagon(Point p, Point c, double r);

/// Line of sight from a to b against the given opaque polygons: false when
/// some stretch of the segment runs strictly inside one of them.
bool segment_clear(Point a, Point b, const std::vector<Polygon>& opaque);

/// Opaque obstacle shapes of a region.
std::vector<Polygon> opaque_shapes(const Region& region);

/// Area of {p in box : pred(p)} by an n x n cell-centred grid.
double grid_area(const Box& box, int n, const std::function<bool(Point)>& pred);

/// Simple polygon, star-shaped about `centre`, radii in [rmin, rmax].
Ring random_star(std::mt19937_64& rng, Point centre, double rmin, double rmax, int vertices);

Ring rect(double x0, double y0, double x1, double y1);
Ring square(double x0, double y0, double side);

/// Axis-aligned comb: a spine along the bottom with `teeth` teeth pointing up.
Ring comb(Point origin, double width, double spine, double tooth_height, int teeth,
          double tooth_width);

/// 30 x 30 (times r_s) rectangle with 1-5 transparent lakes, some with
/// islands.
Region lake_instance(std::uint64_t seed, double r_s = 1.0);

/// 30 x 30 rectangle with 1-3 convex opaque blocks and one opaque comb.
Region opaque_instance(std::uint64_t seed, double r_s = 1.0);

/// 30 x 30 rectangle with 1-3 well-separated convex opaque blocks, each big
/// enough to hold a cell of circumradius r_s/4.
Region convex_opaque_instance(std::uint64_t seed, double r_s = 1.0);

/// Grid-sampled area of the region's land, from the raw rings.
double land_area_oracle(const Region& region, int n);

}  // namespace hexcover::testing
