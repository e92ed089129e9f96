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

#include "hexcover/geom.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hexcover {

/// Transparent obstacles (lakes, swamps) forbid placement but let the sensed
/// signal through. Opaque obstacles (walls, hills) forbid both.
enum class ObstacleClass { Transparent, Opaque };

std::string_view to_string(ObstacleClass c);

struct Obstacle {
  Polygon shape;
  ObstacleClass cls = ObstacleClass::Transparent;
};

/// A problem instance. Immutable once built; the land sets are computed
/// eagerly so concurrent readers never race on a lazy cache.
class Region {
 public:
  Region(Polygon boundary, std::vector<Obstacle> obstacles, double r_s);

  const Polygon& boundary() const { return boundary_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  double sensing_radius() const { return r_s_; }
  const Tolerances& tolerances() const { return tol_; }

  bool has_opaque() const;
  bool has_transparent() const;

  /// Boundary minus every obstacle, regardless of class.
  const PolygonSet& land() const { return land_; }

  /// Union of the opaque obstacles only (possibly empty).
  const PolygonSet& opaque_union() const { return opaque_; }

  /// True when `p` lies on the closure of the accessible land.
  bool accessible(Point p) const;

  /// (cell ∩ land) for a convex cell, computed against the obstacles that
  /// overlap the cell instead of the full land set.
  PolygonSet land_in(const Polygon& cell) const;

  Box bounding_box() const { return boundary_.envelope(); }

 private:
  Polygon boundary_;
  std::vector<Obstacle> obstacles_;
  double r_s_;
  Tolerances tol_;
  PolygonSet land_;
  PolygonSet opaque_;
};

/// Placement domain: boundary minus all obstacles.
PolygonSet accessible_land(const Region& r);

/// Coverage target. Identical to accessible_land: neither obstacle class is
/// itself a coverage target.
PolygonSet sensable_land(const Region& r);

/// Parses the JSON instance format:
///   { "r_s": 1.0,
///     "boundary": [[x, y], ...],
///     "obstacles": [ { "class": "transparent" | "opaque",
///                      "ring": [[x, y], ...],
///                      "holes": [[[x, y], ...], ...] } ] }
/// "holes" is optional and describes islands inside an obstacle.
/// Throws ValidationError naming the offending ring.
Region parse_region(std::string_view document);

}  // namespace hexcover
