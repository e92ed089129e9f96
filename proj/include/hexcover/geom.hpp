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

// Planar polygon kernel. Polygons are stored as Boost.Geometry models with
// counter-clockwise outer rings, clockwise holes, and closed rings (first
// vertex repeated). All boolean results are snap-rounded and stripped of
// sliver components before they are handed back.

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/box.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/register/point.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexcover {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point a);
double distance(Point a, Point b);

/// Raised when an input violates a geometric invariant (self-intersection,
/// too few vertices, non-finite coordinates, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a boolean operation cannot produce a valid result even after
/// snap-rounding the operands to a coarser grid.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerances for one problem instance. All three scale with the sensing
/// radius so an instance expressed in metres behaves like one in kilometres.
struct Tolerances {
  double snap = 1e-9;  // coordinate grid used by boolean operations
  double area = 1e-6;  // area comparisons; slivers below this are discarded
  double band = 1e-6;  // boundary band width used by point location

  static Tolerances for_radius(double r_s);
};

}  // namespace hexcover

BOOST_GEOMETRY_REGISTER_POINT_2D(hexcover::Point, double,
                                 boost::geometry::cs::cartesian, x, y)

namespace hexcover {

namespace bg = boost::geometry;

using Ring = std::vector<Point>;  // open ring, no repeated closing vertex
using BgPolygon = bg::model::polygon<Point, /*ClockWise=*/false, /*Closed=*/true>;
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;
using Box = bg::model::box<Point>;

enum class Location { Interior, Boundary, Exterior };

/// A simple polygon with holes.
class Polygon {
 public:
  Polygon() = default;

  /// Builds and validates. The outer ring is made counter-clockwise and holes
  /// clockwise regardless of the input orientation.
  Polygon(Ring outer, std::vector<Ring> holes = {});

  /// Wraps an already-valid Boost polygon (used for boolean results).
  static Polygon from_boost(BgPolygon p);

  Ring outer() const;
  std::vector<Ring> holes() const;
  std::size_t hole_count() const { return poly_.inners().size(); }

  double area() const;
  Box envelope() const;
  const BgPolygon& boost() const { return poly_; }

 private:
  BgPolygon poly_;
};

/// A set of pairwise interior-disjoint polygons.
class PolygonSet {
 public:
  PolygonSet() = default;
  explicit PolygonSet(Polygon p);
  explicit PolygonSet(std::vector<Polygon> polygons);

  /// Wraps a Boost multipolygon that is assumed valid.
  static PolygonSet from_boost(BgMultiPolygon m);

  bool empty() const { return multi_.empty(); }
  std::size_t size() const { return multi_.size(); }
  std::vector<Polygon> polygons() const;
  Polygon polygon(std::size_t i) const { return Polygon::from_boost(multi_[i]); }

  /// Envelope of all members; std::nullopt for the empty set.
  std::optional<Box> envelope() const;
  const BgMultiPolygon& boost() const { return multi_; }

 private:
  BgMultiPolygon multi_;
};

enum class BooleanOp { Union, Intersection, Difference };

/// Signed-ring area (outer positive, holes negative), summed over members.
double area(const PolygonSet& s);
double area(const Polygon& p);
double ring_area(std::span<const Point> ring);  // signed, CCW positive

PolygonSet boolean(BooleanOp op, const PolygonSet& a, const PolygonSet& b,
                   const Tolerances& tol = {});
PolygonSet set_union(const PolygonSet& a, const PolygonSet& b,
                     const Tolerances& tol = {});
PolygonSet set_intersection(const PolygonSet& a, const PolygonSet& b,
                            const Tolerances& tol = {});
PolygonSet set_difference(const PolygonSet& a, const PolygonSet& b,
                          const Tolerances& tol = {});

/// Union of many sets, merged pairwise in a balanced tree so the result does
/// not depend on a long left-deep chain of overlays.
PolygonSet union_all(std::span<const PolygonSet> parts, const Tolerances& tol = {});

Location locate(Point p, const PolygonSet& s, const Tolerances& tol = {});
Location locate(Point p, const Polygon& poly, const Tolerances& tol = {});

/// A point strictly inside the polygon, as far from its boundary as a
/// horizontal scan at a handful of heights can find.
Point interior_point(const Polygon& poly);

/// Sutherland-Hodgman clip of an arbitrary ring against a convex CCW ring.
/// The returned ring may contain degenerate edges when the subject is not
/// convex, but its signed area is exactly the area of the intersection.
Ring clip_to_convex(std::span<const Point> subject, std::span<const Point> convex);

/// Area of (s ∩ convex) for a convex CCW ring, without a general overlay.
double clipped_area(const PolygonSet& s, std::span<const Point> convex);

/// Separating-axis test on two convex rings: true when the projections
/// overlap by more than `tol` on every axis. A negative `tol` makes rings
/// that merely touch count as overlapping.
bool convex_rings_overlap(std::span<const Point> a, std::span<const Point> b, double tol);

double distance_to_segment(Point p, Point a, Point b);
bool boxes_overlap(const Box& a, const Box& b);
Box ring_envelope(std::span<const Point> ring);

/// Throws ValidationError (prefixed by `what`) if the ring has fewer than
/// three vertices, non-finite coordinates, zero area or self-intersections.
void validate_ring(std::span<const Point> ring, const std::string& what);

}  // namespace hexcover
