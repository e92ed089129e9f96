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

// Independent coverage check by dense point sampling. Uses plain Euclidean
// distance and its own point-in-ring and segment tests; nothing here calls
// the polygon boolean operations.

#include "hexcover/bounds.hpp"
#include "hexcover/region.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hexcover {

struct CoverageReport {
  std::size_t samples = 0;
  std::size_t covered = 0;       // samples with multiplicity >= k
  double fraction = 1.0;         // covered / samples, 1 when there are no samples
  int min_multiplicity = 0;
  std::vector<Point> uncovered_points;  // first max_uncovered failures
  PlanMode mode = PlanMode::Transparent;
  int k = 1;
  double density = 0.0;
  std::uint64_t seed = 0;
  bool empty = false;            // no land sample at all
};

/// Crossing-number test against raw rings; points on an edge may go either way.
bool point_in_ring(Point p, std::span<const Point> ring);

/// Land membership from the instance rings: inside the boundary, outside its
/// holes, and not inside any obstacle (islands in an obstacle are land).
class LandTester {
 public:
  explicit LandTester(const Region& region);
  bool on_land(Point p) const;
  /// Distance from p to the nearest boundary or obstacle edge.
  double edge_distance(Point p) const;

 private:
  struct Shape {
    std::vector<std::vector<Point>> rings;  // outer first, then holes
    Box box;
    bool contains(Point p) const;
  };
  Shape boundary_;
  std::vector<Shape> obstacles_;
};

/// Line of sight against the opaque obstacles: the closed segment a-b may
/// touch their boundaries but must not enter their interiors.
class SightTester {
 public:
  explicit SightTester(const Region& region);
  bool clear(Point a, Point b) const;
  bool empty() const { return blocks_.empty(); }

 private:
  struct Block {
    std::vector<std::vector<Point>> rings;
    Box box;
  };
  bool strictly_inside(const Block& b, Point p) const;
  std::vector<Block> blocks_;
  double eps_;
};

/// Jittered grid over the bounding box with spacing sqrt(A_hex / density);
/// only land samples are kept. Deterministic in seed.
std::vector<Point> sample_land(const Region& region, double density, std::uint64_t seed);

/// Multiplicity of coverage at every land sample. A sample is covered by a
/// sensor within distance r_s (and, in opaque mode, with clear line of
/// sight). Coincident sensors count once. Throws ValidationError for
/// density < 100, k outside 1..3 or a sensor that is not on land.
CoverageReport coverage_report(const Region& region, std::span<const Point> sensors, int k,
                               PlanMode mode, double density = 1e4, std::uint64_t seed = 1,
                               std::size_t max_uncovered = 100);

}  // namespace hexcover
