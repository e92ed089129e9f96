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

// JSON documents and SVG rendering for the command-line tool.

#include "hexcover/kcover.hpp"
#include "hexcover/oracle.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hexcover {

/// Every knob of a run, with defaults resolved before it is written out.
struct RunConfig {
  std::optional<PlanMode> mode;  // nullopt: opaque iff the region has opaque obstacles
  int k = 1;
  PlannerConfig planner;
  std::uint64_t seed = 1;
  double density = 1e4;
};

nlohmann::json point_json(Point p);
nlohmann::json points_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::json config_json(const RunConfig& config, const Region& region);
nlohmann::json bounds_json(const BoundsReport& b);
nlohmann::json trace_json(const IterationTrace& t);
nlohmann::json report_json(const CoverageReport& r);

/// Placement document: sensors, layers, trace, bounds, config and the
/// SHA-256 of the instance file.
nlohmann::json placement_json(const KPlan& plan, const RunConfig& config, const Region& region,
                              const std::string& input_sha256);

struct Placement {
  std::vector<Point> sensors;
  int k = 1;
  std::optional<PlanMode> mode;
};

/// Reads the parts of a placement document needed for verification.
Placement parse_placement(std::string_view document);

/// Error document written on any failure.
nlohmann::json error_json(std::string_view kind, std::string_view message);

std::string sha256_hex(std::string_view data);

struct SvgScene {
  std::optional<Tessellation> tessellation;
  std::vector<PolygonSet> rsps;
  std::vector<Point> sensors;
  PolygonSet residue;
  double width_px = 800.0;
};

/// Layers back to front: land, transparent obstacles (hatched), opaque
/// obstacles, tessellation, RSP outlines, sensors, uncovered residue.
std::string render_svg(const Region& region, const SvgScene& scene);

}  // namespace hexcover
