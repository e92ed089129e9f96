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

#include "hexcover/bounds.hpp"

#include "hexcover/hex.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace hexcover {

std::string_view to_string(PlanMode m) {
  return m == PlanMode::Opaque ? "opaque" : "transparent";
}

namespace {

void check_cell_multiple(double value, double a_hex, double tol, const char* name) {
  if (value < 0.0) {
    throw ValidationError(std::string(name) + " must be nonnegative");
  }
  const double cells = value / a_hex;
  if (std::abs(cells - std::round(cells)) * a_hex > tol) {
    std::ostringstream msg;
    msg << name << " = " << value << " is not a whole number of cells";
    throw ValidationError(msg.str());
  }
}

}  // namespace

BoundsReport transparent_bounds(double A, double A_o, double r_s) {
  if (!(r_s > 0.0)) throw ValidationError("r_s must be positive");
  BoundsReport b;
  b.A_hex = hexagon_area(r_s);
  const double tol = Tolerances::for_radius(r_s).area;
  check_cell_multiple(A, b.A_hex, tol, "A");
  check_cell_multiple(A_o, b.A_hex, tol, "A_o");
  b.A = A;
  b.A_o = A_o;
  b.lower = (A + A_o) / b.A_hex;
  b.upper = (A + 5.0 * A_o) / b.A_hex;
  b.mode = PlanMode::Transparent;
  return b;
}

BoundsReport opaque_bounds(double A, double A_o, double r_s, double R_O, double max_ratio) {
  if (!(R_O > 0.0) || R_O > max_ratio * r_s) {
    std::ostringstream msg;
    msg << "R_O = " << R_O << " outside (0, " << max_ratio << " * r_s]";
    throw ValidationError(msg.str());
  }
  BoundsReport b = transparent_bounds(A, A_o, r_s);
  b.mode = PlanMode::Opaque;
  b.R_O = R_O;
  b.n = count_inner_hexagons(r_s, R_O);
  b.upper = (A + (b.n / 3.0) * A_o) / b.A_hex;
  b.assumption_conditional = true;
  return b;
}

int count_inner_hexagons(double r_s, double R_O) {
  if (!(R_O > 0.0) || R_O > r_s) throw ValidationError("need 0 < R_O <= r_s");
  const auto outer = hexagon_vertices({0.0, 0.0}, r_s, 0.0);
  const HexGrid sub({0.0, 0.0}, R_O, 0.0);
  const int reach = static_cast<int>(std::ceil(2.0 * r_s / (std::numbers::sqrt3 * R_O))) + 2;
  int n = 0;
  for (int q = -reach; q <= reach; ++q) {
    for (int r = -reach; r <= reach; ++r) {
      const auto cell = hexagon_vertices(sub.centre({q, r}), R_O, 0.0);
      // Negative tolerance: touching along an edge or at a vertex counts.
      if (convex_rings_overlap(cell, outer, -1e-9 * r_s)) ++n;
    }
  }
  return n;
}

KershnerResult kershner_ratio(double l, double w, double r_s) {
  if (!(l > 2.0 * r_s) || !(w > 2.0 * r_s)) {
    throw ValidationError("kershner_ratio needs l, w > 2 r_s");
  }
  const Box box{{0.0, 0.0}, {l, w}};
  const Tessellation t = generate(box, r_s, {0.0, 0.0}, 0.0);
  KershnerResult out;
  out.count = static_cast<std::int64_t>(t.cells().size());
  out.ratio = static_cast<double>(out.count) / (l * w / hexagon_area(r_s));
  return out;
}

double min_pairwise_distance(std::span<const Point> pts) {
  double best = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, distance(pts[i], pts[j]));
    }
  }
  return best;
}

std::array<Point, 5> five_point_witness(double r_s) {
  // Search on the unit cell, scale at the end.
  constexpr std::array<std::uint64_t, 8> kSeeds{11, 23, 37, 41, 53, 67, 79, 97};
  constexpr int kSteps = 40000;

  std::array<Point, 5> best{};
  double best_score = -1.0;
  for (const std::uint64_t seed : kSeeds) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::normal_distribution<double> jitter(0.0, 1.0);

    std::array<Point, 5> pts;
    for (auto& p : pts) {
      do {
        p = {coord(rng), coord(rng)};
      } while (!in_closed_hexagon(p, {0.0, 0.0}, 1.0, 0.0));
    }
    double score = min_pairwise_distance(pts);
    for (int step = 0; step < kSteps; ++step) {
      const double sigma = 0.25 * std::pow(1e-4, static_cast<double>(step) / kSteps);
      const std::size_t i = static_cast<std::size_t>(step) % pts.size();
      const Point saved = pts[i];
      pts[i] = {saved.x + sigma * jitter(rng), saved.y + sigma * jitter(rng)};
      const double s = in_closed_hexagon(pts[i], {0.0, 0.0}, 1.0, 0.0)
                           ? min_pairwise_distance(pts)
                           : -1.0;
      if (s >= score) {
        score = s;
      } else {
        pts[i] = saved;
      }
    }
    if (score > best_score) {
      best_score = score;
      best = pts;
    }
  }

  for (auto& p : best) p = r_s * p;
  // Exact re-check on the scaled points: strictly inside the closed cell and
  // strictly farther apart than r_s.
  for (const auto& p : best) {
    if (!in_closed_hexagon(p, {0.0, 0.0}, r_s, 0.0)) {
      throw std::runtime_error("five-point search left the hexagon");
    }
  }
  if (!(min_pairwise_distance(best) > r_s)) {
    throw std::runtime_error("five-point search failed to separate the points");
  }
  return best;
}

}  // namespace hexcover
