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

#include "hexcover/region.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace hexcover {

std::string_view to_string(ObstacleClass c) {
  return c == ObstacleClass::Opaque ? "opaque" : "transparent";
}

Region::Region(Polygon boundary, std::vector<Obstacle> obstacles, double r_s)
    : boundary_(std::move(boundary)),
      obstacles_(std::move(obstacles)),
      r_s_(r_s),
      tol_(Tolerances::for_radius(r_s)) {
  if (!(r_s_ > 0.0) || !std::isfinite(r_s_)) {
    throw ValidationError("r_s must be a positive finite number");
  }
  if (boundary_.area() <= 0.0) throw ValidationError("boundary has zero area");

  const PolygonSet outer(boundary_);
  std::vector<PolygonSet> all;
  std::vector<PolygonSet> opaque;
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    const PolygonSet o(obstacles_[i].shape);
    if (area(set_intersection(o, outer, tol_)) <= 0.0) {
      throw ValidationError("obstacles[" + std::to_string(i) +
                            "]: does not intersect the boundary interior");
    }
    all.push_back(o);
    if (obstacles_[i].cls == ObstacleClass::Opaque) opaque.push_back(o);
  }
  land_ = set_difference(outer, union_all(all, tol_), tol_);
  opaque_ = union_all(opaque, tol_);
}

bool Region::has_opaque() const {
  for (const auto& o : obstacles_) {
    if (o.cls == ObstacleClass::Opaque) return true;
  }
  return false;
}

bool Region::has_transparent() const {
  for (const auto& o : obstacles_) {
    if (o.cls == ObstacleClass::Transparent) return true;
  }
  return false;
}

bool Region::accessible(Point p) const {
  return locate(p, land_, tol_) != Location::Exterior;
}

PolygonSet Region::land_in(const Polygon& cell) const {
  PolygonSet out = set_intersection(PolygonSet(cell), PolygonSet(boundary_), tol_);
  if (out.empty()) return out;
  const Box cb = cell.envelope();
  for (const auto& o : obstacles_) {
    if (!boxes_overlap(o.shape.envelope(), cb)) continue;
    out = set_difference(out, PolygonSet(o.shape), tol_);
    if (out.empty()) break;
  }
  return out;
}

PolygonSet accessible_land(const Region& r) { return r.land(); }

PolygonSet sensable_land(const Region& r) { return r.land(); }

namespace {

Ring parse_ring(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of [x, y] pairs");
  Ring ring;
  ring.reserve(j.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ValidationError(what + ": every vertex must be a [x, y] number pair");
    }
    ring.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  validate_ring(ring, what);
  return ring;
}

Polygon build_polygon(Ring outer, std::vector<Ring> holes, const std::string& what) {
  try {
    return Polygon(std::move(outer), std::move(holes));
  } catch (const ValidationError& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

}  // namespace

Region parse_region(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance document must be an object");
  if (!doc.contains("r_s") || !doc["r_s"].is_number()) {
    throw ValidationError("missing numeric field r_s");
  }
  if (!doc.contains("boundary")) throw ValidationError("missing field boundary");

  const double r_s = doc["r_s"].get<double>();
  Polygon boundary = build_polygon(parse_ring(doc["boundary"], "boundary"), {}, "boundary");

  std::vector<Obstacle> obstacles;
  if (doc.contains("obstacles")) {
    const auto& list = doc["obstacles"];
    if (!list.is_array()) throw ValidationError("obstacles must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string what = "obstacles[" + std::to_string(i) + "]";
      const auto& o = list[i];
      if (!o.is_object() || !o.contains("class") || !o.contains("ring")) {
        throw ValidationError(what + ": needs class and ring");
      }
      const std::string cls = o["class"].is_string() ? o["class"].get<std::string>() : "";
      Obstacle ob;
      if (cls == "transparent") {
        ob.cls = ObstacleClass::Transparent;
      } else if (cls == "opaque") {
        ob.cls = ObstacleClass::Opaque;
      } else {
        throw ValidationError(what + ".class: must be \"transparent\" or \"opaque\"");
      }
      Ring ring = parse_ring(o["ring"], what + ".ring");
      std::vector<Ring> holes;
      if (o.contains("holes")) {
        if (!o["holes"].is_array()) throw ValidationError(what + ".holes: expected an array");
        for (std::size_t h = 0; h < o["holes"].size(); ++h) {
          holes.push_back(
              parse_ring(o["holes"][h], what + ".holes[" + std::to_string(h) + "]"));
        }
      }
      ob.shape = build_polygon(std::move(ring), std::move(holes), what);
      obstacles.push_back(std::move(ob));
    }
  }
  return Region(std::move(boundary), std::move(obstacles), r_s);
}

}  // namespace hexcover
