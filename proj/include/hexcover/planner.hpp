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

// Sensor placement by iterated shifting of a hexagonal tessellation.
//
// Cells whose centre is on land get a sensor at the centre. Cells whose
// centre is not usable but which still hold uncovered land ("anomalous"
// cells) are grouped into edge-connected clusters. Each iteration picks, per
// cluster, the lattice shift whose shifted centres cover the most of the
// cluster's remaining land, places sensors there, and repeats until the
// remaining area drops below epsilon_area.

#include "hexcover/bounds.hpp"
#include "hexcover/geom.hpp"
#include "hexcover/hex.hpp"
#include "hexcover/region.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hexcover {

enum class CellClass { Normal, Anomalous, Void };

std::string_view to_string(CellClass c);

struct PlannerConfig {
  int lattice_depth = 2;
  int max_refinements = 4;
  std::optional<double> epsilon_area;  // default 1e-4 · A_hex
  int ngon = 64;
  std::optional<Point> origin;         // default: lower-left corner of the bbox
  double orientation = 0.0;
  double R_O_ratio = 0.25;             // R_O / r_s reported in opaque bounds
  bool prune = false;
  std::vector<Point> reserved;         // positions the planner may not use

  double resolved_epsilon_area(double r_s) const;
  Point resolved_origin(const Region& region) const;
};

/// Edge-connected anomalous cells. `cells` are indices into
/// Tessellation::cells(), ascending.
struct Cluster {
  int id = 0;
  std::vector<int> cells;
};

struct ClusterStep {
  int cluster_id = 0;
  std::size_t cells = 0;
  double uncovered_before = 0.0;
  double best_u = 0.0;
  Shift shift;
  int depth = 0;
  std::size_t lattice_size = 0;  // |L′| actually searched for this cluster
  bool fallback = false;
  std::size_t sensors_added = 0;
};

struct IterationRecord {
  int j = 0;
  double uncovered_area = 0.0;    // Δ(R^j)
  std::size_t clusters = 0;       // N^(j): clusters remaining after iteration j
  std::size_t sensors_added = 0;
  std::vector<ClusterStep> steps;
  std::size_t shift_evaluations = 0;       // U_l calls, one per (cluster, shift)
  std::size_t cell_shift_evaluations = 0;  // Σ over calls of the cluster size
};

struct IterationTrace {
  std::vector<IterationRecord> records;
};

struct CellCounts {
  std::size_t normal = 0;
  std::size_t anomalous = 0;
  std::size_t empty = 0;
};

struct Plan {
  std::vector<Point> sensors;
  IterationTrace trace;
  BoundsReport bounds;
  PlanMode mode = PlanMode::Transparent;
  int k = 1;
  CellCounts counts;
  Point origin;
  double orientation = 0.0;
  double epsilon_area = 0.0;
  double residual_area = 0.0;

  /// Iterations after the initial placement.
  int iterations() const { return static_cast<int>(trace.records.size()) - 1; }
};

/// The planner could not finish; carries what was left uncovered.
class PlannerError : public std::runtime_error {
 public:
  PlannerError(const std::string& what, PolygonSet residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const PolygonSet& residual() const { return residual_; }

 private:
  PolygonSet residual_;
};

struct ShiftEvaluation {
  double u = 0.0;              // U_l: uncovered area left in the cluster
  std::vector<Point> placed;   // accessible shifted centres that add > ε_geom
  double realized = 0.0;       // area covered by `placed` alone
};

struct BestShift {
  Shift shift;
  double u = 0.0;
  std::vector<Point> placed;
};

// -- transparent obstacles -------------------------------------------------

std::vector<CellClass> classify(const Region& region, const Tessellation& t);

/// Maximal edge-connected components of the cells flagged in `member`,
/// ordered by their smallest axial index.
std::vector<Cluster> clusters(const Tessellation& t, const std::vector<bool>& member);
std::vector<Cluster> clusters(const Tessellation& t, const std::vector<CellClass>& classes);

/// U_l for one cluster. `uncovered` must lie inside the cluster's cells.
ShiftEvaluation eval_shift(const Cluster& cluster, const PolygonSet& uncovered,
                           const Region& region, const Tessellation& t, const Shift& l);

/// Minimises U_l over the lattice; ties go to the first shift in lattice
/// order.
BestShift best_shift(const Cluster& cluster, const PolygonSet& uncovered, const Region& region,
                     const Tessellation& t, const ShiftLattice& lattice);

Plan plan_transparent(const Region& region, const PlannerConfig& config = {});

// -- opaque obstacles ------------------------------------------------------

/// Anomalous additionally covers cells whose centre is on land but cannot
/// see all of the cell's land.
std::vector<CellClass> classify_opaque(const Region& region, const Tessellation& t, int ngon = 64);

ShiftEvaluation eval_shift_opaque(const Cluster& cluster, const PolygonSet& uncovered,
                                  const Region& region, const Tessellation& t, const Shift& l,
                                  int ngon = 64);

BestShift best_shift_opaque(const Cluster& cluster, const PolygonSet& uncovered,
                            const Region& region, const Tessellation& t,
                            const ShiftLattice& lattice, int ngon = 64);

Plan plan_opaque(const Region& region, const PlannerConfig& config = {});

/// Opaque planner if the region has any opaque obstacle, else transparent.
Plan plan_auto(const Region& region, const PlannerConfig& config = {});

/// The area a sensor at x is credited with by the planner: the hexagon H(x),
/// intersected (opaque mode) with what x can see, intersected with land.
PolygonSet sensor_claim(const Region& region, Point x, PlanMode mode, const PlannerConfig& config = {});

/// Tessellation used by the planner for this region and config.
Tessellation primary_tessellation(const Region& region, const PlannerConfig& config);

}  // namespace hexcover
