#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "wormkit/census.hpp"
#include "wormkit/generators.hpp"
#include "wormkit/patch_io.hpp"
#include "wormkit/svg.hpp"
#include "wormkit/tiling.hpp"
#include "wormkit/travel.hpp"
#include "wormkit/worms.hpp"

namespace wormkit::cli {

namespace {

/// Input problem that maps to kInputError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  std::string kind;
  int w = 10;
  int h = 10;
  double shear = 0.5;
  int n = 5;
  std::vector<double> offsets;
  double radius = 8.0;
  int grid_range = 0;
  std::string out;
};

struct CheckArgs {
  std::string patch;
  std::string which = "all";
  std::string out;
};

struct TravelArgs {
  std::string patch;
  int from = -1;
  int to = -1;
  std::string method = "bfs";
  int start_worm = -1;
  std::string svg;
  std::string out;
};

struct RenderArgs {
  std::string patch;
  std::string out;
  bool worms = false;
  std::vector<int> route;
  std::string route_method = "bfs";
  int cones = -1;
  int cone_rung = -1;
  bool labels = false;
};

Patch load_or_throw(const std::string& path) {
  try {
    return load_patch(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("write failed: " + path);
}

TileId tile_arg(const Patch& patch, int id, const char* what) {
  if (id < 0 || static_cast<std::size_t>(id) >= patch.tile_count()) {
    throw InputError(std::string(what) + " tile id " + std::to_string(id) + " is out of range");
  }
  return TileId{id};
}

std::string census_table(const CensusReport& census) {
  std::ostringstream os;
  os << "# prototile classes tiles bound_n status\n";
  for (std::size_t p = 0; p < census.per_prototile_counts.size(); ++p) {
    const bool ok = BigInt(census.per_prototile_counts[p]) <= census.bound_n;
    os << "# " << p << ' ' << census.per_prototile_counts[p] << ' ' << census.per_prototile_tiles[p]
       << ' ' << census.bound_n.str() << ' ' << (ok ? "pass" : "fail") << '\n';
  }
  return os.str();
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Patch patch;
  std::string provenance;
  try {
    if (a.kind == "grid") {
      patch = gen_square_grid(a.w, a.h);
      provenance = "grid w=" + std::to_string(a.w) + " h=" + std::to_string(a.h);
    } else if (a.kind == "sheared") {
      patch = gen_sheared_grid(a.w, a.h, a.shear);
      provenance = "sheared w=" + std::to_string(a.w) + " h=" + std::to_string(a.h) +
                   " shear=" + format_double(a.shear);
    } else {
      MultigridSpec spec;
      spec.n = a.n;
      spec.offsets = a.offsets;
      if (spec.offsets.empty()) spec.offsets.assign(static_cast<std::size_t>(std::max(a.n, 0)), 0.2);
      spec.radius = a.radius;
      spec.grid_range = a.grid_range;
      patch = gen_multigrid(spec).patch;
      provenance = describe(spec);
    }
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  write_text(a.out, format_patch_file(patch, provenance), out);
  if (!a.out.empty() && a.out != "-") {
    err << "wrote " << patch.tile_count() << " tiles (" << patch.protoset().size()
        << " prototiles) to " << a.out << '\n';
  }
  return kOk;
}

// --- check ------------------------------------------------------------------

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Patch patch = load_or_throw(a.patch);
  const bool all = a.which == "all";
  std::vector<CheckReport> reports;
  std::string table;

  const ValidationReport validation = validate(patch);
  if (all || a.which == "vertex") reports.push_back(validation);

  const bool needs_worms = a.which != "vertex";
  if (needs_worms && !validation.passed()) {
    if (!all) {
      CheckReport r;
      r.name = a.which;
      r.violations.push_back({"precondition", {}, {}, std::nullopt, "patch is not vertex-to-vertex"});
      reports.push_back(r);
    }
  } else if (needs_worms) {
    const WormIndex worms = all_worms(patch);
    if (all || a.which == "crossing") reports.push_back(check_crossing_lemma(patch, worms));
    if (all || a.which == "cone") reports.push_back(check_cone_lemma(patch, worms));
    if (all || a.which == "loop") reports.push_back(check_no_loop(patch, worms));
    if (all || a.which == "worm-step") reports.push_back(check_worm_step_orientation(patch, worms));
    if (all || a.which == "census") {
      const CensusReport census = orientation_census(patch);
      reports.push_back(check_orientation_theorem(patch, census));
      table = census_table(census);
    }
  }

  write_text(a.out, table + format_reports(reports), out);
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return pass ? kOk : kCheckFailed;
}

// --- travel -----------------------------------------------------------------

std::string join(const auto& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(to_int(ids[i]));
  return s.empty() ? "-" : s;
}

struct RouteOutcome {
  std::optional<TravelRoute> route;
  std::string diagnostic;
};

RouteOutcome find_route(const Patch& patch, const WormIndex& worms, TileId s, TileId t,
                        const std::string& method, std::optional<WormId> start_worm) {
  if (method == "bfs") {
    auto route = travel_bfs(build_worm_graph(patch, worms), s, t);
    return {route, route ? "" : "target not reachable within the patch"};
  }
  auto result = travel_constructive(patch, worms, s, t, start_worm);
  return {result.route, result.diagnostic};
}

int cmd_travel(const TravelArgs& a, std::ostream& out) {
  const Patch patch = load_or_throw(a.patch);
  const TileId s = tile_arg(patch, a.from, "start");
  const TileId t = tile_arg(patch, a.to, "end");
  if (!validate(patch).passed()) throw InputError("patch is not vertex-to-vertex");
  const WormIndex worms = all_worms(patch);

  std::optional<WormId> start_worm;
  if (a.start_worm >= 0) {
    if (static_cast<std::size_t>(a.start_worm) >= worms.worms.size()) throw InputError("start worm out of range");
    start_worm = WormId{a.start_worm};
  }

  const RouteOutcome outcome = find_route(patch, worms, s, t, a.method, start_worm);
  const int budget = turn_budget(patch.alpha());

  CheckReport report;
  report.name = "travel";
  report.add_stat("method", a.method);
  report.add_stat("start", static_cast<std::int64_t>(to_int(s)));
  report.add_stat("end", static_cast<std::int64_t>(to_int(t)));
  report.add_stat("budget", static_cast<std::int64_t>(budget));
  int code = kOk;
  if (!outcome.route) {
    report.violations.push_back({"unreachable", {to_int(s), to_int(t)}, {}, std::nullopt, outcome.diagnostic});
    code = kUnreachable;
  } else {
    const TravelRoute& r = *outcome.route;
    const auto count = static_cast<std::int64_t>(r.worm_count());
    report.add_stat("worms", join(r.worms));
    report.add_stat("turns", join(r.turns));
    report.add_stat("worm_count", count);
    report.add_stat("within_budget", std::string(count <= budget ? "yes" : "no"));
    report.add_stat("strictly_below_budget", std::string(count < budget ? "yes" : "no"));
    if (count > budget) {
      report.violations.push_back({"budget", {to_int(s), to_int(t)}, {}, std::nullopt,
                                   "route uses more than " + std::to_string(budget) + " worms"});
      code = kCheckFailed;
    }
  }
  write_text(a.out, format_report(report), out);

  if (!a.svg.empty()) {
    RenderOptions opts;
    opts.route = outcome.route;
    write_text(a.svg, render_svg(patch, worms, opts), out);
  }
  return code;
}

// --- render -----------------------------------------------------------------

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const Patch patch = load_or_throw(a.patch);
  const WormIndex worms = all_worms(patch);
  RenderOptions opts;
  opts.worms = a.worms;
  opts.labels = a.labels;
  if (a.cones >= 0) {
    if (static_cast<std::size_t>(a.cones) >= worms.worms.size()) throw InputError("cone worm out of range");
    opts.cone_worm = WormId{a.cones};
    if (a.cone_rung >= 0) opts.cone_rung = static_cast<std::size_t>(a.cone_rung);
  }
  if (!a.route.empty()) {
    if (a.route.size() != 2) throw InputError("--route expects two tile ids");
    const TileId s = tile_arg(patch, a.route[0], "route start");
    const TileId t = tile_arg(patch, a.route[1], "route end");
    opts.route = find_route(patch, worms, s, t, a.route_method, std::nullopt).route;
  }
  write_text(a.out, render_svg(patch, worms, opts), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wormkit: parallelogram tilings, worms and orientation checks"};
  app.name("wormkit");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a patch file");
  // --h is the row count, so help is long-form only here.
  generate->set_help_flag("--help", "Print this help message and exit");
  generate->add_option("kind", gen.kind, "grid | sheared | multigrid")
      ->required()
      ->check(CLI::IsMember({"grid", "sheared", "multigrid"}));
  generate->add_option("--w", gen.w, "Columns (grid, sheared)")->check(CLI::PositiveNumber);
  generate->add_option("--h", gen.h, "Rows (grid, sheared)")->check(CLI::PositiveNumber);
  generate->add_option("--shear", gen.shear, "Horizontal shear of v (sheared)");
  generate->add_option("--n", gen.n, "Number of grid families (multigrid)")->check(CLI::Range(2, 64));
  generate->add_option("--offsets", gen.offsets, "Comma-separated offsets, one per family")->delimiter(',');
  generate->add_option("--radius", gen.radius, "Keep intersections within this radius")
      ->check(CLI::PositiveNumber);
  generate->add_option("--grid-range", gen.grid_range, "Line index range per family (0 = auto)");
  generate->add_option("-o,--out", gen.out, "Output patch file (default: stdout)");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Run checkers on a patch file");
  check->add_option("patch", chk.patch, "Patch file")->required();
  check->add_option("which", chk.which, "all | vertex | crossing | cone | loop | census | worm-step")
      ->check(CLI::IsMember({"all", "vertex", "crossing", "cone", "loop", "census", "worm-step"}));
  check->add_option("-o,--out", chk.out, "Report file (default: stdout)");

  TravelArgs trv;
  auto* travel = app.add_subcommand("travel", "Connect two tiles by worms");
  travel->add_option("patch", trv.patch, "Patch file")->required();
  travel->add_option("--from", trv.from, "Start tile id")->required();
  travel->add_option("--to", trv.to, "End tile id")->required();
  travel->add_option("--method", trv.method, "bfs | constructive")
      ->check(CLI::IsMember({"bfs", "constructive"}));
  travel->add_option("--start-worm", trv.start_worm, "First worm of the constructive sweep");
  travel->add_option("--svg", trv.svg, "Also write an SVG with the route highlighted");
  travel->add_option("-o,--out", trv.out, "Report file (default: stdout)");

  RenderArgs rnd;
  auto* render = app.add_subcommand("render", "Render a patch as SVG");
  render->add_option("patch", rnd.patch, "Patch file")->required();
  render->add_option("-o,--out", rnd.out, "SVG file (default: stdout)");
  render->add_flag("--worms", rnd.worms, "Overlay worms, one hue per family");
  render->add_option("--route", rnd.route, "Highlight a route between two tile ids: S,T")->delimiter(',');
  render->add_option("--route-method", rnd.route_method, "bfs | constructive")
      ->check(CLI::IsMember({"bfs", "constructive"}));
  render->add_option("--cones", rnd.cones, "Draw forbidden cones at this worm");
  render->add_option("--cone-rung", rnd.cone_rung, "Rung index for --cones (default: middle)");
  render->add_flag("--labels", rnd.labels, "Print tile ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    apply_tolerance_from_env();
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (check->parsed()) return cmd_check(chk, out);
    if (travel->parsed()) return cmd_travel(trv, out);
    if (render->parsed()) return cmd_render(rnd, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace wormkit::cli
