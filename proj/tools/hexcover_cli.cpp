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

// hexcover: plan / verify / bounds / kershner / render.
// Exit status: 0 ok, 1 invalid input, 2 planner failure, 3 verification failure.

#include "hexcover/io.hpp"
#include "hexcover/visibility.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hexcover::PlanMode;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kPlanner = 2;
constexpr int kVerification = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hexcover::ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hexcover::ValidationError("cannot write " + path);
  out << text;
}

std::optional<PlanMode> parse_mode(const std::string& m) {
  if (m == "auto") return std::nullopt;
  if (m == "transparent") return PlanMode::Transparent;
  if (m == "opaque") return PlanMode::Opaque;
  throw hexcover::ValidationError("--mode must be auto, transparent or opaque");
}

struct PlanArgs {
  std::string instance;
  std::string output;
  std::string svg;
  std::string mode = "auto";
  int k = 1;
  int lattice_depth = 2;
  int max_refinements = 4;
  std::optional<double> epsilon_area;
  int ngon = 64;
  std::uint64_t seed = 1;
  std::vector<double> origin;
  double orientation = 0.0;
  double density = 1e4;
  bool prune = false;
  bool verify = false;
  double min_fraction = 0.999;
};

hexcover::RunConfig run_config(const PlanArgs& a) {
  hexcover::RunConfig c;
  c.mode = parse_mode(a.mode);
  c.k = a.k;
  c.planner.lattice_depth = a.lattice_depth;
  c.planner.max_refinements = a.max_refinements;
  c.planner.epsilon_area = a.epsilon_area;
  c.planner.ngon = a.ngon;
  c.planner.orientation = a.orientation;
  c.planner.prune = a.prune;
  if (!a.origin.empty()) {
    if (a.origin.size() != 2) throw hexcover::ValidationError("--origin takes two numbers");
    c.planner.origin = hexcover::Point{a.origin[0], a.origin[1]};
  }
  c.seed = a.seed;
  c.density = a.density;
  return c;
}

int cmd_plan(const PlanArgs& a) {
  const std::string text = read_file(a.instance);
  const hexcover::Region region = hexcover::parse_region(text);
  const hexcover::RunConfig config = run_config(a);
  const hexcover::KPlan plan = hexcover::plan_k(region, config.k, config.planner, config.mode);
  json doc = hexcover::placement_json(plan, config, region, hexcover::sha256_hex(text));

  int status = kOk;
  if (a.verify) {
    const auto sensors = plan.sensors();
    const auto rep = hexcover::coverage_report(region, sensors, config.k, plan.layers.front().mode,
                                               config.density, config.seed);
    doc["verification"] = hexcover::report_json(rep);
    if (rep.fraction < a.min_fraction) status = kVerification;
  }
  write_output(a.output, doc.dump(2) + "\n");
  if (!a.svg.empty()) {
    hexcover::SvgScene scene;
    scene.tessellation = hexcover::primary_tessellation(region, config.planner);
    scene.sensors = plan.sensors();
    write_output(a.svg, hexcover::render_svg(region, scene));
  }
  return status;
}

struct VerifyArgs {
  std::string instance;
  std::string placement;
  std::string output;
  std::optional<int> k;
  std::string mode = "auto";
  double density = 1e4;
  std::uint64_t seed = 1;
  double min_fraction = 0.999;
};

int cmd_verify(const VerifyArgs& a) {
  const hexcover::Region region = hexcover::parse_region(read_file(a.instance));
  const hexcover::Placement placement = hexcover::parse_placement(read_file(a.placement));
  const int k = a.k.value_or(placement.k);
  PlanMode mode = region.has_opaque() ? PlanMode::Opaque : PlanMode::Transparent;
  if (const auto m = parse_mode(a.mode)) {
    mode = *m;
  } else if (placement.mode) {
    mode = *placement.mode;
  }
  const auto rep = hexcover::coverage_report(region, placement.sensors, k, mode, a.density, a.seed);
  json doc = hexcover::report_json(rep);
  const bool pass = rep.fraction >= a.min_fraction;
  doc["min_fraction"] = a.min_fraction;
  doc["pass"] = pass;
  write_output(a.output, doc.dump(2) + "\n");
  return pass ? kOk : kVerification;
}

struct BoundsArgs {
  std::string instance;
  std::string mode = "auto";
  std::string output;
  double R_O_ratio = 0.25;
  std::vector<double> origin;
  double orientation = 0.0;
  int ngon = 64;
};

int cmd_bounds(const BoundsArgs& a) {
  const hexcover::Region region = hexcover::parse_region(read_file(a.instance));
  hexcover::PlannerConfig pc;
  pc.orientation = a.orientation;
  pc.ngon = a.ngon;
  if (!a.origin.empty()) {
    if (a.origin.size() != 2) throw hexcover::ValidationError("--origin takes two numbers");
    pc.origin = hexcover::Point{a.origin[0], a.origin[1]};
  }
  const PlanMode mode = parse_mode(a.mode).value_or(
      region.has_opaque() ? PlanMode::Opaque : PlanMode::Transparent);
  const hexcover::Tessellation t = hexcover::primary_tessellation(region, pc);
  const auto classes = mode == PlanMode::Opaque ? hexcover::classify_opaque(region, t, a.ngon)
                                                : hexcover::classify(region, t);
  std::size_t normal = 0, anomalous = 0;
  for (const auto c : classes) {
    normal += c == hexcover::CellClass::Normal;
    anomalous += c == hexcover::CellClass::Anomalous;
  }
  const double r_s = region.sensing_radius();
  const double a_hex = hexcover::hexagon_area(r_s);
  const double A = static_cast<double>(normal) * a_hex;
  const double A_o = static_cast<double>(anomalous) * a_hex;
  const auto b = mode == PlanMode::Opaque
                     ? hexcover::opaque_bounds(A, A_o, r_s, a.R_O_ratio * r_s, a.R_O_ratio)
                     : hexcover::transparent_bounds(A, A_o, r_s);
  write_output(a.output, hexcover::bounds_json(b).dump(2) + "\n");
  return kOk;
}

struct KershnerArgs {
  double r_s = 1.0;
  std::vector<double> sizes{10, 20, 40, 80, 200};
  std::vector<double> aspect{1.0};
  std::string output;
};

int cmd_kershner(const KershnerArgs& a) {
  json rows = json::array();
  bool all_above = true;
  for (const double size : a.sizes) {
    for (const double ratio : a.aspect) {
      const double l = size * a.r_s;
      const double w = size * ratio * a.r_s;
      const auto res = hexcover::kershner_ratio(l, w, a.r_s);
      all_above = all_above && res.ratio > 1.0;
      rows.push_back({{"l", l}, {"w", w}, {"count", res.count}, {"ratio", res.ratio}});
    }
  }
  write_output(a.output, json{{"r_s", a.r_s}, {"rows", rows}}.dump(2) + "\n");
  return all_above ? kOk : kVerification;
}

struct RenderArgs {
  std::string instance;
  std::string placement;
  std::string output;
  bool tessellation = false;
  bool rsp = false;
  int ngon = 64;
};

int cmd_render(const RenderArgs& a) {
  const hexcover::Region region = hexcover::parse_region(read_file(a.instance));
  hexcover::SvgScene scene;
  if (a.tessellation) scene.tessellation = hexcover::primary_tessellation(region, {});
  if (!a.placement.empty()) {
    scene.sensors = hexcover::parse_placement(read_file(a.placement)).sensors;
  }
  if (a.rsp) {
    for (const auto& s : scene.sensors) {
      scene.rsps.push_back(hexcover::rsp(s, region, a.ngon).polygon);
    }
  }
  write_output(a.output, hexcover::render_svg(region, scene));
  return kOk;
}

int fail(int code, std::string_view kind, std::string_view message, const json& extra = {}) {
  json doc = hexcover::error_json(kind, message);
  if (!extra.is_null()) doc["error"].update(extra);
  std::cout << doc.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hexagonal-tessellation sensor placement"};
  app.require_subcommand(1);

  PlanArgs plan;
  auto* p = app.add_subcommand("plan", "Compute a sensor placement");
  p->add_option("instance", plan.instance, "Instance JSON")->required();
  p->add_option("-o,--output", plan.output, "Placement JSON (default stdout)");
  p->add_option("--svg", plan.svg, "Also write an SVG drawing");
  p->add_option("--mode", plan.mode, "auto, transparent or opaque");
  p->add_option("--k", plan.k, "Coverage multiplicity (1-3)");
  p->add_option("--lattice-depth", plan.lattice_depth, "Shift lattice depth");
  p->add_option("--max-refinements", plan.max_refinements, "Lattice refinements per cluster");
  p->add_option("--epsilon-area", plan.epsilon_area, "Stop when less area is uncovered");
  p->add_option("--ngon", plan.ngon, "Sides of the sensing-disk polygon");
  p->add_option("--seed", plan.seed, "Oracle seed");
  p->add_option("--origin", plan.origin, "Tessellation origin x y")->expected(2);
  p->add_option("--orientation", plan.orientation, "Tessellation orientation (radians)");
  p->add_option("--density", plan.density, "Oracle samples per hexagon area");
  p->add_flag("--prune", plan.prune, "Drop redundant sensors afterwards");
  p->add_flag("--verify", plan.verify, "Run the sampling oracle on the result");
  p->add_option("--min-fraction", plan.min_fraction, "Oracle pass threshold");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a placement with the sampling oracle");
  v->add_option("instance", verify.instance, "Instance JSON")->required();
  v->add_option("placement", verify.placement, "Placement JSON")->required();
  v->add_option("-o,--output", verify.output, "Report JSON (default stdout)");
  v->add_option("--k", verify.k, "Required multiplicity (default from the placement)");
  v->add_option("--mode", verify.mode, "auto, transparent or opaque");
  v->add_option("--density", verify.density, "Samples per hexagon area");
  v->add_option("--seed", verify.seed, "Sampling seed");
  v->add_option("--min-fraction", verify.min_fraction, "Pass threshold");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Sensor-count bounds for an instance");
  b->add_option("instance", bounds.instance, "Instance JSON")->required();
  b->add_option("--mode", bounds.mode, "auto, transparent or opaque");
  b->add_option("--R-O-ratio", bounds.R_O_ratio, "R_O / r_s for the opaque bound");
  b->add_option("--origin", bounds.origin, "Tessellation origin x y")->expected(2);
  b->add_option("--orientation", bounds.orientation, "Tessellation orientation (radians)");
  b->add_option("--ngon", bounds.ngon, "Sides of the sensing-disk polygon");
  b->add_option("-o,--output", bounds.output, "Report JSON (default stdout)");

  KershnerArgs kershner;
  auto* k = app.add_subcommand("kershner", "Cell-count ratio for growing rectangles");
  k->add_option("--r-s", kershner.r_s, "Sensing radius");
  k->add_option("--sizes", kershner.sizes, "Rectangle lengths in units of r_s");
  k->add_option("--aspect", kershner.aspect, "Width / length ratios");
  k->add_option("-o,--output", kershner.output, "Table JSON (default stdout)");

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw an instance as SVG");
  r->add_option("instance", render.instance, "Instance JSON")->required();
  r->add_option("--plan", render.placement, "Placement JSON to overlay");
  r->add_flag("--tessellation", render.tessellation, "Draw the primary tessellation");
  r->add_flag("--rsp", render.rsp, "Draw each sensor's restricted star polygon");
  r->add_option("--ngon", render.ngon, "Sides of the sensing-disk polygon");
  r->add_option("-o,--output", render.output, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kValidation, "usage", e.what());
  }

  try {
    if (*p) return cmd_plan(plan);
    if (*v) return cmd_verify(verify);
    if (*b) return cmd_bounds(bounds);
    if (*k) return cmd_kershner(kershner);
    if (*r) return cmd_render(render);
  } catch (const hexcover::ValidationError& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const hexcover::PlacementError& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const hexcover::PlannerError& e) {
    return fail(kPlanner, "planner", e.what(), {{"residual_area", hexcover::area(e.residual())}});
  } catch (const hexcover::GeometryError& e) {
    return fail(kPlanner, "geometry", e.what());
  } catch (const std::exception& e) {
    return fail(kPlanner, "internal", e.what());
  }
  return kOk;
}
