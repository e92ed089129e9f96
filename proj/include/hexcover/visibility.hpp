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

// Bounded visibility: the region a sensor at x can see within its sensing
// radius when opaque obstacles block line of sight. Disks are always
// replaced by the inscribed regular n-gon so every claimed point is truly
// within range.

#include "hexcover/geom.hpp"
#include "hexcover/region.hpp"

#include <stdexcept>
#include <vector>

namespace hexcover {

/// The sensor position is not admissible (inside an obstacle, or outside
/// the accessible land).
class PlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed occluder edges, oriented so the obstacle interior lies on the
/// left. `next` links each edge to its successor in the same ring, which is
/// how the sweep tells which side of a vertex is solid.
class SegmentSet {
 public:
  struct Edge {
    Point a;
    Point b;
    std::size_t next;
  };

  SegmentSet() = default;
  static SegmentSet from_polygons(const PolygonSet& occluders);

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  /// True when p is strictly inside an occluder (farther than `tol` from
  /// every edge).
  bool strictly_inside(Point p, double tol) const;

 private:
  std::vector<Edge> edges_;
};

/// Vertices of the regular n-gon inscribed in the circle of radius `radius`
/// about `centre`; the first vertex sits at angle `phase`.
Ring disk_ngon(Point centre, double radius, int ngon, double phase = 0.0);

/// Angular sweep from x against the occluders, bounded by the inscribed
/// n-gon of radius `horizon`. The result is star-shaped about x. Throws
/// PlacementError if x is strictly inside an occluder.
Polygon visibility_polygon(Point x, const SegmentSet& occluders, double horizon, int ngon,
                           double phase = 0.0);

struct RspPolygon {
  Point anchor;
  PolygonSet polygon;  // may be disconnected where the boundary is not convex
  int ngon = 64;
};

/// Restricted star polygon: points of the sensable land within the inscribed
/// n-gon disk of radius r_s about x and in line of sight of x. Transparent
/// obstacles do not occlude. Throws PlacementError if x is not on the
/// accessible land and ValidationError if ngon < 12.
RspPolygon rsp(Point x, const Region& region, int ngon = 64, double phase = 0.0);

/// Occluders of a region (its opaque obstacles).
SegmentSet occluders_of(const Region& region);

}  // namespace hexcover
