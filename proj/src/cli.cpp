#include "planembed/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "planembed/connectivity.hpp"
#include "planembed/error.hpp"
#include "planembed/io.hpp"
#include "planembed/solver.hpp"
#include "planembed/svg.hpp"
#include "planembed/triangulate.hpp"
#include "planembed/validator.hpp"

namespace planembed {

namespace {

struct RunConfig {
  std::string graph_path;
  std::string coords_path;
  std::string output_path;
  std::string weights = "barycentric";
  std::string placement = "regular";
  std::string format = "json";
  std::string deltas = "0.01,0.0001,0.000001";
  double delta = -1.0;
  double tolerance = 0.0;
  double radius = 1.0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
};

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorCode::InvalidArgument, what + ": '" + text + "' is not a number");
  return v;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::InvalidArgument, "seed '" + text + "' is not a nonnegative integer");
  return std::stoull(text);
}

Tolerances tolerances(const RunConfig& cfg) {
  Tolerances tol;
  if (cfg.tolerance > 0.0) tol.geometric_rel = tol.residual_rel = cfg.tolerance;
  return tol;
}

WeightScheme make_weights(const RunConfig& cfg, const PlaneGraph& g) {
  if (cfg.weights == "barycentric") return barycentric_weights(g);
  if (cfg.weights == "random") return random_weight_scheme(g, cfg.seed);
  if (starts_with(cfg.weights, "random:")) return random_weight_scheme(g, parse_seed(cfg.weights.substr(7)));
  if (starts_with(cfg.weights, "file:")) return io::parse_weights(io::read_file(cfg.weights.substr(5)), g);
  throw Error(ErrorCode::InvalidArgument,
              "--weights expects barycentric, random[:seed] or file:<path>, got '" + cfg.weights + "'");
}

BoundaryPlacement make_placement(const RunConfig& cfg, const PlaneGraph& g) {
  if (cfg.placement == "regular") return regular_polygon_placement(g.outer_cycle(), cfg.radius);
  if (starts_with(cfg.placement, "regular:"))
    return regular_polygon_placement(g.outer_cycle(), parse_double(cfg.placement.substr(8), "--placement"));
  if (starts_with(cfg.placement, "file:")) return io::parse_placement(io::read_file(cfg.placement.substr(5)), g);
  throw Error(ErrorCode::InvalidArgument,
              "--placement expects regular[:radius] or file:<path>, got '" + cfg.placement + "'");
}

std::vector<double> parse_deltas(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const double d = parse_double(item, "--deltas");
    if (!(d >= 0.0 && d < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta " + item + " is outside [0, 1)");
    out.push_back(d);
  }
  return out;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty())
    out << text;
  else
    io::write_file(cfg.output_path, text);
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

std::string num(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const StructureReport r = is_convex_embeddable(g);
  emit(cfg, out, dump(io::structure_report_to_json(g, r)));
  return r.convex_embeddable ? kExitOk : kExitPropertyFails;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const Tolerances tol = tolerances(cfg);
  const WeightScheme w = make_weights(cfg, g);
  const BoundaryPlacement p = make_placement(cfg, g);
  EmbeddingResult result;
  if (cfg.delta >= 0.0) {
    if (cfg.delta >= 1.0) throw Error(ErrorCode::InvalidArgument, "--delta must lie in [0, 1)");
    result = perturbed_map(g, w, p, PerturbationParams{cfg.delta, triangulate(g)}, tol);
  } else {
    result = convex_combination_map(g, w, p, tol);
  }
  ValidationOptions vo;
  vo.tol = tol;
  vo.scale = placement_scale(result.placement);
  vo.covering_samples = cfg.samples;
  vo.seed = cfg.seed;
  const ValidationReport report = validate(g, result.coords, vo);

  if (cfg.format == "svg") {
    emit(cfg, out, render_svg(g, result.coords));
  } else if (cfg.format == "json") {
    io::json doc = io::coords_to_json(g, result.coords);
    doc["residual"] = result.residual;
    if (cfg.delta >= 0.0) doc["delta"] = cfg.delta;
    doc["validation"] = io::validation_report_to_json(g, report);
    emit(cfg, out, dump(doc));
  } else {
    throw Error(ErrorCode::InvalidArgument, "--out expects json or svg, got '" + cfg.format + "'");
  }
  return report.is_embedding ? kExitOk : kExitPropertyFails;
}

int cmd_triangulate(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const TriangulationResult t = triangulate(g);
  emit(cfg, out, dump(io::graph_to_json(t.graph, t.added_edges)));
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const std::vector<Point> coords = io::parse_coords(io::read_file(cfg.coords_path), g);
  ValidationOptions vo;
  vo.tol = tolerances(cfg);
  vo.covering_samples = cfg.samples;
  vo.seed = cfg.seed;
  const ValidationReport r = validate(g, coords, vo);
  emit(cfg, out, dump(io::validation_report_to_json(g, r)));
  return r.is_embedding ? kExitOk : kExitPropertyFails;
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const std::vector<Point> coords = io::parse_coords(io::read_file(cfg.coords_path), g);
  emit(cfg, out, render_svg(g, coords));
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const PlaneGraph g = io::parse_graph(io::read_file(cfg.graph_path));
  const std::vector<double> deltas = parse_deltas(cfg.deltas);
  std::string csv = "delta,max_deviation,restriction_is_embedding\n";
  if (!deltas.empty()) {
    const Tolerances tol = tolerances(cfg);
    const WeightScheme w = make_weights(cfg, g);
    const BoundaryPlacement p = make_placement(cfg, g);
    const EmbeddingResult base = convex_combination_map(g, w, p, tol);
    PerturbationParams params{0.0, triangulate(g)};
    ValidationOptions vo;
    vo.tol = tol;
    vo.scale = placement_scale(base.placement);
    for (double d : deltas) {
      params.delta = d;
      const EmbeddingResult fd = perturbed_map(g, w, p, params, tol);
      const bool ok = validate(g, fd.coords, vo).is_embedding;
      csv += num(d) + "," + num(max_deviation(fd.coords, base.coords)) + "," + (ok ? "true" : "false") + "\n";
    }
  }
  emit(cfg, out, csv);
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularSystem:
    case ErrorCode::InaccurateSolve:
      return kExitInternalError;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Convex combination embeddings of plane graphs", "planembed"};
  app.require_subcommand(1);
  app.add_option("--tolerance", cfg.tolerance, "Relative geometric and residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for random weights and covering samples");
  app.add_option("--radius", cfg.radius, "Radius of the regular boundary polygon")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Report connectivity and convex embeddability");
  check->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  check->add_option("-o,--output", cfg.output_path, "Write the report here");

  auto* embed = app.add_subcommand("embed", "Solve a convex combination map");
  embed->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  embed->add_option("--weights", cfg.weights, "barycentric | random[:seed] | file:<path>");
  embed->add_option("--placement", cfg.placement, "regular[:radius] | file:<path>");
  embed->add_option("--delta", cfg.delta, "Perturb through the triangulation with this delta");
  embed->add_option("--out", cfg.format, "json | svg");
  embed->add_option("--samples", cfg.samples, "Covering number samples");
  embed->add_option("-o,--output", cfg.output_path, "Write the result here");

  auto* tri = app.add_subcommand("triangulate", "Add chords until every bounded face is a triangle");
  tri->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  tri->add_option("-o,--output", cfg.output_path, "Write the triangulated graph here");

  auto* val = app.add_subcommand("validate", "Check whether coordinates give an embedding");
  val->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  val->add_option("coords", cfg.coords_path, "Coordinates JSON")->required();
  val->add_option("--samples", cfg.samples, "Covering number samples");
  val->add_option("-o,--output", cfg.output_path, "Write the report here");

  auto* render = app.add_subcommand("render", "Draw coordinates as SVG");
  render->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  render->add_option("coords", cfg.coords_path, "Coordinates JSON")->required();
  render->add_option("-o,--output", cfg.output_path, "Write the SVG here");

  auto* sweep = app.add_subcommand("sweep", "Distance between perturbed maps and the map itself");
  sweep->add_option("graph", cfg.graph_path, "Graph JSON")->required();
  sweep->add_option("--deltas", cfg.deltas, "Comma separated values in [0, 1)");
  sweep->add_option("--weights", cfg.weights, "barycentric | random[:seed] | file:<path>");
  sweep->add_option("--placement", cfg.placement, "regular[:radius] | file:<path>");
  sweep->add_option("-o,--output", cfg.output_path, "Write the CSV here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (embed->parsed()) return cmd_embed(cfg, out);
    if (tri->parsed()) return cmd_triangulate(cfg, out);
    if (val->parsed()) return cmd_validate(cfg, out);
    if (render->parsed()) return cmd_render(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
  } catch (const Error& e) {
    err << "planembed: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "planembed: internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace planembed
