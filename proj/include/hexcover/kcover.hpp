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

// k-coverage by k mutually offset tessellations, each driven to 1-coverage on
// its own.

#include "hexcover/planner.hpp"

#include <optional>
#include <vector>

namespace hexcover {

struct KPlan {
  std::vector<Plan> layers;
  int k = 1;
  std::vector<Shift> layer_shifts;  // global offsets of each layer's origin

  /// Sensors of every layer, layer by layer.
  std::vector<Point> sensors() const;
};

/// With u, v the lattice basis: {0} for k = 1, {0, (u+v)/2} for k = 2 and
/// {0, (u+v)/3, 2(u+v)/3} for k = 3.
std::vector<Shift> layer_shifts(int k, double r_s, double orientation = 0.0);

/// Plans each layer with the tessellation origin moved by its layer shift.
/// `mode` selects the planner; nullopt picks it from the obstacle classes.
KPlan plan_k(const Region& region, int k, const PlannerConfig& config = {},
             std::optional<PlanMode> mode = std::nullopt);

}  // namespace hexcover
