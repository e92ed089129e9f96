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

#include "hexcover/kcover.hpp"

namespace hexcover {

std::vector<Point> KPlan::sensors() const {
  std::vector<Point> out;
  for (const Plan& p : layers) out.insert(out.end(), p.sensors.begin(), p.sensors.end());
  return out;
}

std::vector<Shift> layer_shifts(int k, double r_s, double orientation) {
  if (k < 1 || k > 3) throw ValidationError("k must be 1, 2 or 3");
  const HexGrid grid({0.0, 0.0}, r_s, orientation);
  const Point diag = grid.u() + grid.v();
  std::vector<Shift> out{Shift{0.0, 0.0}};
  for (int j = 1; j < k; ++j) {
    const double f = static_cast<double>(j) / k;
    out.push_back({f * diag.x, f * diag.y});
  }
  return out;
}

KPlan plan_k(const Region& region, int k, const PlannerConfig& config,
             std::optional<PlanMode> mode) {
  KPlan out;
  out.k = k;
  out.layer_shifts = layer_shifts(k, region.sensing_radius(), config.orientation);
  const Point origin = config.resolved_origin(region);
  // Later layers may not reuse a position an earlier layer occupies, so every
  // layer contributes its own sensor to the multiplicity.
  std::vector<Point> reserved = config.reserved;
  for (int j = 0; j < k; ++j) {
    PlannerConfig layer = config;
    layer.reserved = reserved;
    const Shift& s = out.layer_shifts[static_cast<std::size_t>(j)];
    layer.origin = Point{origin.x + s.dx, origin.y + s.dy};
    Plan p;
    if (!mode) {
      p = plan_auto(region, layer);
    } else if (*mode == PlanMode::Opaque) {
      p = plan_opaque(region, layer);
    } else {
      p = plan_transparent(region, layer);
    }
    p.k = k;
    reserved.insert(reserved.end(), p.sensors.begin(), p.sensors.end());
    out.layers.push_back(std::move(p));
  }
  return out;
}

}  // namespace hexcover
