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

#include <array>
#include <cstdint>
#include <string_view>

namespace hexcover {

enum class PlanMode { Transparent, Opaque };

std::string_view to_string(PlanMode m);

/// Sensor-count bounds for a classified tessellation. A is the total area of
/// the normal cells and A_o that of the anomalous cells.
struct BoundsReport {
  double A = 0.0;
  double A_o = 0.0;
  double A_hex = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  PlanMode mode = PlanMode::Transparent;
  int n = 0;           // opaque only: inner R_O-cells per r_s-cell
  double R_O = 0.0;    // opaque only
  // The opaque upper bound only holds for convex, R_O-valid obstacles and
  // land pockets that each contain an R_O-cell; it is reported, not enforced.
  bool assumption_conditional = false;
};

/// lower = (A + A_o)/A_hex, upper = (A + 5 A_o)/A_hex. Throws
/// ValidationError for negative areas or areas that are not whole multiples
/// of A_hex.
BoundsReport transparent_bounds(double A, double A_o, double r_s);

/// upper = (A + (n/3) A_o)/A_hex with n = count_inner_hexagons(r_s, R_O).
/// Requires 0 < R_O <= max_ratio * r_s.
BoundsReport opaque_bounds(double A, double A_o, double r_s, double R_O,
                           double max_ratio = 0.25);

/// Number of cells of the R_O tessellation anchored at the centre of an
/// r_s-cell (same orientation) that meet the closed r_s-cell, partially or
/// completely.
int count_inner_hexagons(double r_s, double R_O);

struct KershnerResult {
  std::int64_t count = 0;
  double ratio = 0.0;
};

/// Cells of the default tessellation of the l × w rectangle that meet it,
/// and their count relative to (l·w)/A_hex.
KershnerResult kershner_ratio(double l, double w, double r_s);

/// Five points in the closed r_s-hexagon (centred at the origin, orientation
/// 0) with every pairwise distance strictly greater than r_s. Found by a
/// deterministic multi-start max-min search, then checked exactly.
std::array<Point, 5> five_point_witness(double r_s);

double min_pairwise_distance(std::span<const Point> pts);

}  // namespace hexcover
