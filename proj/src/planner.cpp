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

#include "hexcover/planner.hpp"

#include "hexcover/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace hexcover {

std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::Normal: return "normal";
    case CellClass::Anomalous: return "anomalous";
    case CellClass::Void: return "void";
  }
  return "?";
}

double PlannerConfig::resolved_epsilon_area(double r_s) const {
  return epsilon_area.value_or(1e-4 * hexagon_area(r_s));
}

Point PlannerConfig::resolved_origin(const Region& region) const {
  if (origin) return *origin;
  return region.bounding_box().min_corner();
}

Tessellation primary_tessellation(const Region& region, const PlannerConfig& config) {
  return generate(region.bounding_box(), region.sensing_radius(), config.resolved_origin(region),
                  config.orientation);
}

namespace {

// The sweep horizon uses a multiple of six sides, phased with the cells, so
// that every hexagon H(x) is contained in the horizon polygon of x.
int aligned_ngon(int ngon) { return ((std::max(ngon, 12) + 5) / 6) * 6; }

using SnapKey = std::pair<std::int64_t, std::int64_t>;

SnapKey snap_key(Point p, double grid) {
  return {static_cast<std::int64_t>(std::llround(p.x / grid)),
          static_cast<std::int64_t>(std::llround(p.y / grid))};
}

class Engine {
 public:
  Engine(const Region& region, const Tessellation& t, PlanMode mode, int ngon,
         const std::vector<Point>& reserved = {})
      : region_(region),
        t_(t),
        mode_(mode),
        tol_(region.tolerances()),
        r_s_(t.sensing_radius()),
        ngon_(aligned_ngon(ngon)),
        uncovered_(t.cells().size()) {
    if (mode_ == PlanMode::Opaque) occluders_ = occluders_of(region);
    for (const Point& p : reserved) reserved_.emplace(snap_key(p, tol_.band), p);
  }

  std::vector<PolygonSet>& uncovered() { return uncovered_; }
  const Tolerances& tol() const { return tol_; }

  double total_uncovered() const {
    double total = 0.0;
    for (const auto& u : uncovered_) total += area(u);
    return total;
  }

  PolygonSet residual() const {
    BgMultiPolygon all;
    for (const auto& u : uncovered_) all.insert(all.end(), u.boost().begin(), u.boost().end());
    return PolygonSet::from_boost(std::move(all));
  }

  bool accessible(Point x) {
    const SnapKey key = snap_key(x, tol_.snap);
    auto it = access_.find(key);
    if (it != access_.end()) return it->second;
    // The sweep refuses points strictly inside an opaque obstacle, which is
    // stricter than the land test's tolerance band.
    const bool ok = region_.accessible(x) && !reserved(x) &&
                    !(mode_ == PlanMode::Opaque && occluders_.strictly_inside(x, 1e-9 * r_s_));
    access_.emplace(key, ok);
    return ok;
  }

  Polygon hexagon(Point x) const { return hexagon_polygon(x, r_s_, t_.orientation()); }

  /// H(x) ∩ visible(x), or nullopt when nothing opaque is within reach of x
  /// (the claim is then the whole hexagon).
  const std::optional<PolygonSet>& visible_hexagon(Point x) {
    const SnapKey key = snap_key(x, tol_.snap);
    auto it = visible_.find(key);
    if (it != visible_.end()) return it->second;
    std::optional<PolygonSet> claim;
    if (mode_ == PlanMode::Opaque && occluded_near(x)) {
      const Polygon vis = visibility_polygon(x, occluders_, r_s_, ngon_, t_.orientation());
      claim = set_intersection(PolygonSet(hexagon(x)), PolygonSet(vis), tol_);
    }
    return visible_.emplace(key, std::move(claim)).first->second;
  }

  /// Area of H(x) (∩ visible(x)) ∩ uncovered in one cell.
  double covered_in_cell(Point x, const std::array<Point, 6>& hex, int cell) {
    const PolygonSet& unc = uncovered_[static_cast<std::size_t>(cell)];
    if (unc.empty()) return 0.0;
    const double a = clipped_area(unc, hex);
    if (a <= 0.0 || mode_ == PlanMode::Transparent) return a;
    const auto& vh = visible_hexagon(x);
    if (!vh) return a;
    return area(set_intersection(unc, *vh, tol_));
  }

  std::vector<CellClass> classify(std::vector<PolygonSet>* land_out,
                                  std::vector<PolygonSet>* seen_out) {
    const auto& cells = t_.cells();
    std::vector<CellClass> out(cells.size(), CellClass::Void);
    if (land_out) land_out->assign(cells.size(), {});
    if (seen_out) seen_out->assign(cells.size(), {});
    for (std::size_t i = 0; i < cells.size(); ++i) {
      PolygonSet land = region_.land_in(cells[i].polygon);
      const double la = area(land);
      if (accessible(cells[i].centre)) {
        out[i] = CellClass::Normal;
        if (mode_ == PlanMode::Opaque) {
          if (const auto& vh = visible_hexagon(cells[i].centre)) {
            PolygonSet seen = set_intersection(land, *vh, tol_);
            if (la - area(seen) > tol_.area) out[i] = CellClass::Anomalous;
            if (seen_out) (*seen_out)[i] = std::move(seen);
          } else if (seen_out) {
            (*seen_out)[i] = land;
          }
        }
      } else if (la > tol_.area) {
        out[i] = CellClass::Anomalous;
      }
      if (land_out) (*land_out)[i] = std::move(land);
    }
    return out;
  }

  ShiftEvaluation evaluate(const Cluster& cluster, const std::vector<char>& member, Shift l) {
    ShiftEvaluation ev;
    double total = 0.0;
    for (int c : cluster.cells) total += area(uncovered_[static_cast<std::size_t>(c)]);
    double covered = 0.0;
    const auto& cells = t_.cells();
    for (int c : cluster.cells) {
      ++cell_shift_evaluations;
      const Hexagon& cell = cells[static_cast<std::size_t>(c)];
      const Point x{cell.centre.x + l.dx, cell.centre.y + l.dy};
      if (!accessible(x)) continue;
      const auto hex = hexagon_vertices(x, r_s_, t_.orientation());
      double contrib = 0.0;
      auto visit = [&](AxialIndex idx) {
        const int k = t_.find(idx);
        if (k >= 0 && member[static_cast<std::size_t>(k)]) contrib += covered_in_cell(x, hex, k);
      };
      visit(cell.index);
      for (const AxialIndex n : edge_neighbours(cell.index)) visit(n);
      covered += contrib;
      if (contrib > tol_.area) {
        ev.placed.push_back(x);
        ev.realized += contrib;
      }
    }
    ++shift_evaluations;
    ev.u = std::max(0.0, total - covered);
    return ev;
  }

  /// Removes the sensor's claim from every cell it can reach.
  void cover(Point x) {
    PolygonSet claim;
    if (mode_ == PlanMode::Opaque) {
      const auto& vh = visible_hexagon(x);
      claim = vh ? *vh : PolygonSet(hexagon(x));
    } else {
      claim = PolygonSet(hexagon(x));
    }
    const AxialIndex home = t_.grid().cell_of(x);
    auto visit = [&](AxialIndex idx) {
      const int k = t_.find(idx);
      if (k < 0) return;
      PolygonSet& unc = uncovered_[static_cast<std::size_t>(k)];
      if (unc.empty()) return;
      unc = set_difference(unc, claim, tol_);
      if (area(unc) <= tol_.area) unc = {};
    };
    visit(home);
    for (const AxialIndex n : edge_neighbours(home)) visit(n);
  }

  std::size_t shift_evaluations = 0;
  std::size_t cell_shift_evaluations = 0;

 private:
  // Positions already taken by another coverage layer count as blocked.
  bool reserved(Point x) const {
    if (reserved_.empty()) return false;
    const SnapKey k = snap_key(x, tol_.band);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto [lo, hi] = reserved_.equal_range({k.first + dx, k.second + dy});
        for (auto it = lo; it != hi; ++it) {
          if (distance(it->second, x) <= tol_.band) return true;
        }
      }
    }
    return false;
  }

  bool occluded_near(Point x) const {
    for (const auto& e : occluders_.edges()) {
      if (distance_to_segment(x, e.a, e.b) <= r_s_) return true;
    }
    return false;
  }

  const Region& region_;
  const Tessellation& t_;
  PlanMode mode_;
  Tolerances tol_;
  double r_s_;
  int ngon_;
  SegmentSet occluders_;
  std::vector<PolygonSet> uncovered_;
  std::multimap<SnapKey, Point> reserved_;
  std::map<SnapKey, bool> access_;
  std::map<SnapKey, std::optional<PolygonSet>> visible_;
};

std::vector<char> membership(const Tessellation& t, const Cluster& c) {
  std::vector<char> m(t.cells().size(), 0);
  for (int i : c.cells) m[static_cast<std::size_t>(i)] = 1;
  return m;
}

void load_uncovered(Engine& eng, const Cluster& cluster, const PolygonSet& uncovered,
                    const Tessellation& t) {
  for (int c : cluster.cells) {
    eng.uncovered()[static_cast<std::size_t>(c)] = set_intersection(
        uncovered, PolygonSet(t.cells()[static_cast<std::size_t>(c)].polygon), eng.tol());
  }
}

// Ties within this many A_hex count as equal so the lattice order decides.
constexpr double kTieFraction = 1e-10;

BestShift search(Engine& eng, const Cluster& cluster, const ShiftLattice& lattice,
                 const Tessellation& t, double tie) {
  const auto member = membership(t, cluster);
  BestShift best;
  bool have = false;
  for (const Shift& s : lattice.shifts) {
    ShiftEvaluation ev = eng.evaluate(cluster, member, s);
    if (!have || ev.u < best.u - tie) {
      best = {s, ev.u, std::move(ev.placed)};
      have = true;
    }
  }
  return best;
}

ShiftEvaluation evaluate_standalone(const Cluster& cluster, const PolygonSet& uncovered,
                                    const Region& region, const Tessellation& t, const Shift& l,
                                    PlanMode mode, int ngon) {
  Engine eng(region, t, mode, ngon);
  load_uncovered(eng, cluster, uncovered, t);
  return eng.evaluate(cluster, membership(t, cluster), l);
}

BestShift best_standalone(const Cluster& cluster, const PolygonSet& uncovered,
                          const Region& region, const Tessellation& t,
                          const ShiftLattice& lattice, PlanMode mode, int ngon) {
  if (lattice.shifts.empty()) throw ValidationError("empty shift lattice");
  Engine eng(region, t, mode, ngon);
  load_uncovered(eng, cluster, uncovered, t);
  return search(eng, cluster, lattice, t, kTieFraction * hexagon_area(t.sensing_radius()));
}

// Drops sensors whose claimed area is covered by the remaining sensors,
// newest first.
std::vector<Point> prune_sensors(const Region& region, std::vector<Point> sensors, PlanMode mode,
                                 const PlannerConfig& config) {
  const Tolerances& tol = region.tolerances();
  const double reach = 2.0 * region.sensing_radius();
  std::vector<PolygonSet> claims;
  claims.reserve(sensors.size());
  for (const Point& s : sensors) claims.push_back(sensor_claim(region, s, mode, config));
  std::vector<char> alive(sensors.size(), 1);
  for (std::size_t i = sensors.size(); i-- > 0;) {
    std::vector<PolygonSet> others;
    for (std::size_t j = 0; j < sensors.size(); ++j) {
      if (j != i && alive[j] && distance(sensors[i], sensors[j]) < reach) {
        others.push_back(claims[j]);
      }
    }
    const PolygonSet exclusive = set_difference(claims[i], union_all(others, tol), tol);
    if (area(exclusive) <= tol.area) alive[i] = 0;
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    if (alive[i]) out.push_back(sensors[i]);
  }
  return out;
}

Plan run_planner(const Region& region, const PlannerConfig& config, PlanMode mode) {
  if (config.lattice_depth < 1) throw ValidationError("lattice_depth must be >= 1");
  if (config.max_refinements < 0) throw ValidationError("max_refinements must be >= 0");

  const double r_s = region.sensing_radius();
  const double a_hex = hexagon_area(r_s);
  const double eps = config.resolved_epsilon_area(r_s);
  const Tessellation t = primary_tessellation(region, config);
  const auto& cells = t.cells();

  Engine eng(region, t, mode, config.ngon, config.reserved);
  const Tolerances& tol = eng.tol();
  std::vector<PolygonSet> land;
  std::vector<PolygonSet> seen;
  const std::vector<CellClass> classes = eng.classify(&land, &seen);

  Plan plan;
  plan.mode = mode;
  plan.origin = t.origin();
  plan.orientation = t.orientation();
  plan.epsilon_area = eps;

  std::set<SnapKey> placed_keys;
  auto add_sensor = [&](Point x) {
    if (placed_keys.insert(snap_key(x, tol.snap)).second) {
      plan.sensors.push_back(x);
      return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (classes[i]) {
      case CellClass::Normal:
        ++plan.counts.normal;
        if (area(land[i]) > tol.area) add_sensor(cells[i].centre);
        break;
      case CellClass::Anomalous: {
        ++plan.counts.anomalous;
        PolygonSet unc = land[i];
        // A shadowed cell keeps its centre sensor; only the part the centre
        // cannot see is left to the clusters.
        if (mode == PlanMode::Opaque && eng.accessible(cells[i].centre)) {
          add_sensor(cells[i].centre);
          unc = set_difference(land[i], seen[i], tol);
        }
        if (area(unc) > tol.area) eng.uncovered()[i] = std::move(unc);
        break;
      }
      case CellClass::Void:
        ++plan.counts.empty;
        break;
    }
  }

  const double normal_area = static_cast<double>(plan.counts.normal) * a_hex;
  const double anomalous_area = static_cast<double>(plan.counts.anomalous) * a_hex;
  plan.bounds = mode == PlanMode::Opaque
                    ? opaque_bounds(normal_area, anomalous_area, r_s, config.R_O_ratio * r_s,
                                    config.R_O_ratio)
                    : transparent_bounds(normal_area, anomalous_area, r_s);

  auto active_cells = [&] {
    std::vector<bool> active(cells.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) active[i] = !eng.uncovered()[i].empty();
    return active;
  };

  double delta = eng.total_uncovered();
  {
    IterationRecord rec;
    rec.j = 0;
    rec.uncovered_area = delta;
    rec.clusters = clusters(t, active_cells()).size();
    rec.sensors_added = plan.sensors.size();
    plan.trace.records.push_back(std::move(rec));
  }

  const int guard = static_cast<int>(std::ceil(5.0 * anomalous_area / a_hex - 1e-9)) +
                    config.max_refinements;
  const double tie = kTieFraction * a_hex;
  const ShiftLattice base = shift_lattice(r_s, config.lattice_depth, t.orientation());

  int j = 0;
  while (delta > eps) {
    ++j;
    if (j > guard) {
      std::ostringstream msg;
      msg << "planner did not converge within " << guard << " iterations (" << delta
          << " left uncovered)";
      throw PlannerError(msg.str(), eng.residual());
    }
    IterationRecord rec;
    rec.j = j;
    const std::size_t evals_before = eng.shift_evaluations;
    const std::size_t cell_evals_before = eng.cell_shift_evaluations;

    std::vector<Point> batch;
    for (const Cluster& cluster : clusters(t, active_cells())) {
      const auto member = membership(t, cluster);
      ClusterStep step;
      step.cluster_id = cluster.id;
      step.cells = cluster.cells.size();
      for (int c : cluster.cells) step.uncovered_before += area(eng.uncovered()[static_cast<std::size_t>(c)]);

      // Every shift of the current lattice, keyed by shift so that refinement
      // only evaluates the points a finer lattice adds.
      std::map<Shift, ShiftEvaluation> results;
      auto search_lattice = [&](const ShiftLattice& lattice) {
        const ShiftEvaluation* best = nullptr;
        const Shift* best_shift = nullptr;
        for (const Shift& s : lattice.shifts) {
          auto it = results.find(s);
          if (it == results.end()) it = results.emplace(s, eng.evaluate(cluster, member, s)).first;
          if (!best || it->second.u < best->u - tie) {
            best = &it->second;
            best_shift = &it->first;
          }
        }
        return std::make_pair(*best_shift, *best);
      };
      auto stuck = [&](const ShiftEvaluation& ev) {
        return ev.realized < std::min(eps, 0.5 * step.uncovered_before);
      };

      int depth = config.lattice_depth;
      ShiftLattice lattice = base;
      auto [shift, ev] = search_lattice(lattice);
      for (int refinements = 0; stuck(ev) && refinements < config.max_refinements; ++refinements) {
        depth *= 2;
        lattice = shift_lattice(r_s, depth, t.orientation());
        std::tie(shift, ev) = search_lattice(lattice);
      }
      step.shift = shift;
      step.best_u = ev.u;
      step.depth = depth;
      step.lattice_size = lattice.shifts.size();

      if (stuck(ev)) {
        step.fallback = true;
        for (int c : cluster.cells) {
          for (const Polygon& piece : eng.uncovered()[static_cast<std::size_t>(c)].polygons()) {
            const Point p = interior_point(piece);
            if (!eng.accessible(p)) continue;
            batch.push_back(p);
            ++step.sensors_added;
          }
        }
      } else {
        batch.insert(batch.end(), ev.placed.begin(), ev.placed.end());
        step.sensors_added = ev.placed.size();
      }
      rec.steps.push_back(step);
    }

    for (const Point& x : batch) {
      if (add_sensor(x)) {
        ++rec.sensors_added;
        eng.cover(x);
      }
    }
    const double next = eng.total_uncovered();
    if (!(next < delta)) {
      std::ostringstream msg;
      msg << "iteration " << j << " did not reduce the uncovered area (" << delta << ")";
      throw PlannerError(msg.str(), eng.residual());
    }
    delta = next;
    rec.uncovered_area = delta;
    rec.clusters = clusters(t, active_cells()).size();
    rec.shift_evaluations = eng.shift_evaluations - evals_before;
    rec.cell_shift_evaluations = eng.cell_shift_evaluations - cell_evals_before;
    plan.trace.records.push_back(std::move(rec));
  }

  plan.residual_area = delta;
  if (config.prune) plan.sensors = prune_sensors(region, std::move(plan.sensors), mode, config);
  return plan;
}

}  // namespace

std::vector<CellClass> classify(const Region& region, const Tessellation& t) {
  Engine eng(region, t, PlanMode::Transparent, 64);
  return eng.classify(nullptr, nullptr);
}

std::vector<CellClass> classify_opaque(const Region& region, const Tessellation& t, int ngon) {
  Engine eng(region, t, PlanMode::Opaque, ngon);
  return eng.classify(nullptr, nullptr);
}

std::vector<Cluster> clusters(const Tessellation& t, const std::vector<bool>& member) {
  const auto& cells = t.cells();
  std::vector<int> label(cells.size(), -1);
  std::vector<Cluster> out;
  for (std::size_t seed = 0; seed < cells.size(); ++seed) {
    if (!member[seed] || label[seed] >= 0) continue;
    Cluster c;
    c.id = static_cast<int>(out.size());
    std::vector<int> stack{static_cast<int>(seed)};
    label[seed] = c.id;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      c.cells.push_back(i);
      for (const AxialIndex n : edge_neighbours(cells[static_cast<std::size_t>(i)].index)) {
        const int k = t.find(n);
        if (k >= 0 && member[static_cast<std::size_t>(k)] && label[static_cast<std::size_t>(k)] < 0) {
          label[static_cast<std::size_t>(k)] = c.id;
          stack.push_back(k);
        }
      }
    }
    std::sort(c.cells.begin(), c.cells.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cluster> clusters(const Tessellation& t, const std::vector<CellClass>& classes) {
  std::vector<bool> member(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) member[i] = classes[i] == CellClass::Anomalous;
  return clusters(t, member);
}

ShiftEvaluation eval_shift(const Cluster& cluster, const PolygonSet& uncovered,
                           const Region& region, const Tessellation& t, const Shift& l) {
  return evaluate_standalone(cluster, uncovered, region, t, l, PlanMode::Transparent, 64);
}

ShiftEvaluation eval_shift_opaque(const Cluster& cluster, const PolygonSet& uncovered,
                                  const Region& region, const Tessellation& t, const Shift& l,
                                  int ngon) {
  return evaluate_standalone(cluster, uncovered, region, t, l, PlanMode::Opaque, ngon);
}

BestShift best_shift(const Cluster& cluster, const PolygonSet& uncovered, const Region& region,
                     const Tessellation& t, const ShiftLattice& lattice) {
  return best_standalone(cluster, uncovered, region, t, lattice, PlanMode::Transparent, 64);
}

BestShift best_shift_opaque(const Cluster& cluster, const PolygonSet& uncovered,
                            const Region& region, const Tessellation& t,
                            const ShiftLattice& lattice, int ngon) {
  return best_standalone(cluster, uncovered, region, t, lattice, PlanMode::Opaque, ngon);
}

Plan plan_transparent(const Region& region, const PlannerConfig& config) {
  if (region.has_opaque()) {
    throw ValidationError("plan_transparent called on a region with opaque obstacles");
  }
  return run_planner(region, config, PlanMode::Transparent);
}

Plan plan_opaque(const Region& region, const PlannerConfig& config) {
  return run_planner(region, config, PlanMode::Opaque);
}

Plan plan_auto(const Region& region, const PlannerConfig& config) {
  return region.has_opaque() ? plan_opaque(region, config) : plan_transparent(region, config);
}

PolygonSet sensor_claim(const Region& region, Point x, PlanMode mode, const PlannerConfig& config) {
  const double r_s = region.sensing_radius();
  PolygonSet claim(hexagon_polygon(x, r_s, config.orientation));
  if (mode == PlanMode::Opaque && !region.opaque_union().empty()) {
    const Polygon vis = visibility_polygon(x, occluders_of(region), r_s, aligned_ngon(config.ngon),
                                           config.orientation);
    claim = set_intersection(claim, PolygonSet(vis), region.tolerances());
  }
  return set_intersection(claim, region.land(), region.tolerances());
}

}  // namespace hexcover
