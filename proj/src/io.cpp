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

#include "hexcover/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace hexcover {

using nlohmann::json;

json point_json(Point p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_json(p));
  return out;
}

std::vector<Point> points_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of [x, y] pairs");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ValidationError(what + "[" + std::to_string(i) + "]: expected [x, y]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

json config_json(const RunConfig& config, const Region& region) {
  const double r_s = region.sensing_radius();
  const PlannerConfig& pc = config.planner;
  return {
      {"mode", config.mode ? std::string(to_string(*config.mode)) : std::string("auto")},
      {"resolved_mode", std::string(to_string(config.mode.value_or(
                            region.has_opaque() ? PlanMode::Opaque : PlanMode::Transparent)))},
      {"k", config.k},
      {"lattice_depth", pc.lattice_depth},
      {"max_refinements", pc.max_refinements},
      {"epsilon_area", pc.resolved_epsilon_area(r_s)},
      {"ngon", pc.ngon},
      {"seed", config.seed},
      {"origin", point_json(pc.resolved_origin(region))},
      {"orientation", pc.orientation},
      {"R_O_ratio", pc.R_O_ratio},
      {"prune", pc.prune},
      {"density", config.density},
      {"r_s", r_s},
  };
}

json bounds_json(const BoundsReport& b) {
  json out = {{"mode", std::string(to_string(b.mode))},
              {"A", b.A},
              {"A_o", b.A_o},
              {"A_hex", b.A_hex},
              {"lower", b.lower},
              {"upper", b.upper}};
  if (b.mode == PlanMode::Opaque) {
    out["n"] = b.n;
    out["R_O"] = b.R_O;
    out["assumption_conditional"] = b.assumption_conditional;
  }
  return out;
}

json trace_json(const IterationTrace& t) {
  json out = json::array();
  for (const IterationRecord& r : t.records) {
    out.push_back({{"j", r.j},
                   {"uncovered_area", r.uncovered_area},
                   {"clusters", r.clusters},
                   {"sensors_added", r.sensors_added},
                   {"shift_evaluations", r.shift_evaluations}});
  }
  return out;
}

json report_json(const CoverageReport& r) {
  return {{"samples", r.samples},
          {"covered", r.covered},
          {"fraction", r.fraction},
          {"min_multiplicity", r.min_multiplicity},
          {"uncovered_points", points_json(r.uncovered_points)},
          {"mode", std::string(to_string(r.mode))},
          {"k", r.k},
          {"density", r.density},
          {"seed", r.seed},
          {"empty", r.empty}};
}

json placement_json(const KPlan& plan, const RunConfig& config, const Region& region,
                    const std::string& input_sha256) {
  json layers = json::array();
  for (std::size_t j = 0; j < plan.layers.size(); ++j) {
    const Plan& p = plan.layers[j];
    const Shift& s = plan.layer_shifts[j];
    layers.push_back({{"shift", json::array({s.dx, s.dy})},
                      {"origin", point_json(p.origin)},
                      {"sensors", points_json(p.sensors)},
                      {"counts",
                       {{"normal", p.counts.normal},
                        {"anomalous", p.counts.anomalous},
                        {"void", p.counts.empty}}},
                      {"trace", trace_json(p.trace)},
                      {"bounds", bounds_json(p.bounds)},
                      {"residual_area", p.residual_area}});
  }
  const Plan& first = plan.layers.front();
  return {{"sensors", points_json(plan.sensors())},
          {"k", plan.k},
          {"mode", std::string(to_string(first.mode))},
          {"layers", std::move(layers)},
          {"trace", trace_json(first.trace)},
          {"bounds", bounds_json(first.bounds)},
          {"config", config_json(config, region)},
          {"input_sha256", input_sha256}};
}

Placement parse_placement(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("placement: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sensors")) {
    throw ValidationError("placement: missing field 'sensors'");
  }
  Placement out;
  out.sensors = points_from_json(doc["sensors"], "sensors");
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer()) throw ValidationError("k: expected an integer");
    out.k = doc["k"].get<int>();
  }
  if (doc.contains("mode")) {
    const std::string m = doc["mode"].get<std::string>();
    if (m == "opaque") {
      out.mode = PlanMode::Opaque;
    } else if (m == "transparent") {
      out.mode = PlanMode::Transparent;
    } else {
      throw ValidationError("mode: expected 'transparent' or 'opaque'");
    }
  }
  return out;
}

json error_json(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

namespace {

void path_ring(std::ostringstream& out, const std::vector<Point>& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    out << (i == 0 ? 'M' : 'L') << ring[i].x << ' ' << ring[i].y << ' ';
  }
  out << 'Z';
}

std::string path_data(const Polygon& poly) {
  std::ostringstream out;
  out.precision(10);
  path_ring(out, poly.outer());
  for (const auto& h : poly.holes()) {
    out << ' ';
    path_ring(out, h);
  }
  return out.str();
}

void emit(std::ostringstream& svg, const Polygon& poly, const std::string& style) {
  svg << "<path fill-rule=\"evenodd\" d=\"" << path_data(poly) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Region& region, const SvgScene& scene) {
  const double r_s = region.sensing_radius();
  const Box b = region.bounding_box();
  const double x0 = b.min_corner().x - r_s, y0 = b.min_corner().y - r_s;
  const double w = b.max_corner().x - b.min_corner().x + 2.0 * r_s;
  const double h = b.max_corner().y - b.min_corner().y + 2.0 * r_s;
  const double stroke = 0.02 * r_s;

  std::ostringstream svg;
  svg.precision(10);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.width_px << "\" height=\""
      << scene.width_px * h / w << "\" viewBox=\"" << x0 << ' ' << -(y0 + h) << ' ' << w << ' '
      << h << "\">\n";
  svg << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" << 0.3 * r_s
      << "\" height=\"" << 0.3 * r_s << "\" patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\""
      << 0.3 * r_s << "\" stroke=\"#3b73b9\" stroke-width=\"" << stroke << "\"/></pattern></defs>\n";
  // Flip y so the drawing uses the instance's coordinate frame.
  svg << "<g transform=\"scale(1,-1)\">\n";

  for (const Polygon& p : region.land().polygons()) {
    emit(svg, p, "fill=\"#e8f3e0\" stroke=\"#4d7a3a\" stroke-width=\"" + std::to_string(stroke) + "\"");
  }
  for (const Obstacle& o : region.obstacles()) {
    if (o.cls == ObstacleClass::Transparent) {
      emit(svg, o.shape, "fill=\"url(#hatch)\" stroke=\"#3b73b9\" stroke-width=\"" + std::to_string(stroke) + "\"");
    }
  }
  for (const Obstacle& o : region.obstacles()) {
    if (o.cls == ObstacleClass::Opaque) emit(svg, o.shape, "fill=\"#555555\" stroke=\"none\"");
  }
  if (scene.tessellation) {
    for (const Hexagon& c : scene.tessellation->cells()) {
      emit(svg, c.polygon, "fill=\"none\" stroke=\"#999999\" stroke-width=\"" + std::to_string(0.5 * stroke) + "\"");
    }
  }
  for (const PolygonSet& r : scene.rsps) {
    for (const Polygon& p : r.polygons()) {
      emit(svg, p, "fill=\"none\" stroke=\"#d98c1f\" stroke-width=\"" + std::to_string(stroke) + "\"");
    }
  }
  for (const Point& s : scene.sensors) {
    svg << "<circle cx=\"" << s.x << "\" cy=\"" << s.y << "\" r=\"" << 0.08 * r_s
        << "\" fill=\"#c0392b\"/>\n";
  }
  for (const Polygon& p : scene.residue.polygons()) {
    emit(svg, p, "fill=\"#ff00ff\" fill-opacity=\"0.6\" stroke=\"none\"");
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace hexcover
