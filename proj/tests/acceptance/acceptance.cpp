// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wormkit/census.hpp"
#include "wormkit/generators.hpp"
#include "wormkit/patch_io.hpp"
#include "wormkit/svg.hpp"
#include "wormkit/travel.hpp"
#include "wormkit/worms.hpp"

namespace {

using namespace wormkit;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
// Radii chosen so the multigrid patches hold about 2000 tiles.
constexpr double kPenroseRadius = 9.1;
constexpr double kAmmannRadius = 11.4;
// Census stability ladder, about 1000, 2000 and 4000 tiles.
constexpr double kCensusRadii[] = {6.5, 9.1, 13.0};
constexpr double kCrossingSeconds = 30.0;
constexpr double kAlphaTol = 1e-9;
constexpr int kSeedsPerPatch = 200;
constexpr int kTravelPairs = 100;
constexpr double kTravelSuccess = 0.90;

struct Subject {
  std::string name;
  Patch patch;
  double expected_alpha;
  std::optional<MultigridSpec> spec;  // set for multigrid patches
  std::string generator;
};

std::vector<Subject> make_subjects() {
  std::vector<Subject> out;
  out.push_back({"grid 30x30", gen_square_grid(30, 30), kPi / 2, std::nullopt, "grid w=30 h=30"});
  out.push_back({"sheared 30x30 s=0.5", gen_sheared_grid(30, 30, 0.5), angle_between({1, 0}, {0.5, 1}),
                 std::nullopt, "sheared w=30 h=30 shear=0.5"});
  const auto p5 = testing::penrose_spec(kPenroseRadius);
  out.push_back({"multigrid n=5", gen_multigrid(p5).patch, kPi / 5, p5, describe(p5)});
  const auto p4 = testing::ammann_beenker_spec(kAmmannRadius);
  out.push_back({"multigrid n=4", gen_multigrid(p4).patch, kPi / 4, p4, describe(p4)});
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- 1 ---------------------------------------------------------------------

Outcome crossing(const std::vector<Subject>& subjects) {
  Outcome o;
  for (const auto& s : subjects) {
    const auto t0 = Clock::now();
    const CheckReport r = check_crossing_lemma(s.patch, all_worms(s.patch));
    const double secs = seconds_since(t0);
    if (!r.passed()) o.fail(s.name + ": " + std::to_string(r.violations.size()) + " violations");
    if (secs >= kCrossingSeconds) o.fail(s.name + ": took " + fixed(secs) + " s");
    o.note(s.name + " " + *r.stat("pairs_checked") + " pairs in " + fixed(secs, 3) + " s");
  }
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome cone(const std::vector<Subject>& subjects) {
  Outcome o;
  for (const auto& s : subjects) {
    if (std::abs(s.patch.alpha() - s.expected_alpha) > kAlphaTol) {
      o.fail(s.name + ": alpha " + format_double(s.patch.alpha()) + " expected " +
             format_double(s.expected_alpha));
    }
    const CheckReport r = check_cone_lemma(s.patch, all_worms(s.patch));
    if (!r.passed()) o.fail(s.name + ": " + std::to_string(r.violations.size()) + " tiles in cones");
    o.note(s.name + " " + *r.stat("rungs") + " rungs");
  }
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome loops(const std::vector<Subject>& subjects) {
  Outcome o;
  std::mt19937 rng(20240603);
  for (const auto& s : subjects) {
    const WormIndex idx = all_worms(s.patch);
    const CheckReport r = check_no_loop(s.patch, idx);
    if (!r.passed()) o.fail(s.name + ": " + std::to_string(r.violations.size()) + " revisits");
    std::uniform_int_distribution<std::size_t> pick(0, s.patch.tile_count() - 1);
    std::uniform_int_distribution<int> slot(0, 3);
    int mismatches = 0;
    for (int i = 0; i < kSeedsPerPatch; ++i) {
      const Tile& t = s.patch.tiles()[pick(rng)];
      const int k = slot(rng);
      const Worm traced = trace_worm(s.patch, t.id, t.edges[static_cast<std::size_t>(k)]);
      const Worm& indexed = idx.worm(idx.tile_worms[to_index(t.id)][static_cast<std::size_t>(k % 2)]);
      std::vector<TileId> a = traced.tiles, b = indexed.tiles;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) ++mismatches;
    }
    if (mismatches) o.fail(s.name + ": " + std::to_string(mismatches) + " seeds disagree");
  }
  o.note(std::to_string(kSeedsPerPatch) + " seeds per patch");
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome travel(const std::vector<Subject>& subjects) {
  Outcome o;
  for (const auto& s : subjects) {
    if (!s.spec) continue;
    const int expected_budget = s.spec->n == 5 ? 10 : 8;
    const int budget = turn_budget(s.patch.alpha());
    if (budget != expected_budget) {
      o.fail(s.name + ": budget " + std::to_string(budget) + " expected " + std::to_string(expected_budget));
    }
    const WormIndex idx = all_worms(s.patch);
    const WormGraph graph = build_worm_graph(s.patch, idx);
    const auto central = testing::central_third(s.patch);
    std::mt19937 rng(static_cast<unsigned>(1000 + s.spec->n));
    std::uniform_int_distribution<std::size_t> pick(0, central.size() - 1);

    int ok = 0, over = 0, bfs_worse = 0, bad_diag = 0, invalid = 0, max_used = 0;
    for (int i = 0; i < kTravelPairs; ++i) {
      const TileId a = central[pick(rng)], b = central[pick(rng)];
      const auto best = travel_bfs(graph, a, b);
      if (!best) {
        o.fail(s.name + ": no BFS route " + std::to_string(to_int(a)) + "->" + std::to_string(to_int(b)));
        continue;
      }
      if (static_cast<int>(best->worm_count()) > budget) ++over;
      const TravelResult r = travel_constructive(s.patch, idx, a, b);
      if (!r.route) {
        if (r.diagnostic.rfind("boundary truncation", 0) != 0) ++bad_diag;
        continue;
      }
      ++ok;
      const int used = static_cast<int>(r.route->worm_count());
      max_used = std::max(max_used, used);
      if (used > budget) ++over;
      if (best->worm_count() > r.route->worm_count()) ++bfs_worse;
      if (!route_is_valid(idx, *r.route)) ++invalid;
    }
    const double rate = static_cast<double>(ok) / kTravelPairs;
    if (over) o.fail(s.name + ": " + std::to_string(over) + " routes over budget");
    if (bfs_worse) o.fail(s.name + ": BFS longer than constructive on " + std::to_string(bfs_worse));
    if (invalid) o.fail(s.name + ": " + std::to_string(invalid) + " malformed routes");
    if (bad_diag) o.fail(s.name + ": " + std::to_string(bad_diag) + " failures without truncation diagnostic");
    if (rate < kTravelSuccess) o.fail(s.name + ": success " + fixed(100 * rate, 0) + "%");
    o.note(s.name + " " + std::to_string(central.size()) + " central tiles, success " + fixed(100 * rate, 0) +
           "%, max " + std::to_string(max_used) + "/" + std::to_string(budget) + " worms");
  }
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome census() {
  Outcome o;
  constexpr std::int64_t kExpectedPerRhomb = 10;
  std::vector<std::int64_t> first;
  for (double radius : kCensusRadii) {
    const Patch p = gen_multigrid(testing::penrose_spec(radius)).patch;
    const CensusReport c = orientation_census(p);
    std::string counts;
    for (std::size_t i = 0; i < c.per_prototile_counts.size(); ++i) {
      counts += (i ? "+" : "") + std::to_string(c.per_prototile_counts[i]);
      if (c.per_prototile_counts[i] != kExpectedPerRhomb) {
        o.fail(std::to_string(p.tile_count()) + " tiles: prototile " + std::to_string(i) + " has " +
               std::to_string(c.per_prototile_counts[i]) + " classes, expected " +
               std::to_string(kExpectedPerRhomb));
      }
      if (BigInt(c.per_prototile_counts[i]) > c.bound_n) o.fail("census above bound");
    }
    if (c.m != 2 || c.k != 10 || c.bound_n != BigInt(1398102)) {
      o.fail("n=5 bound inputs m=" + std::to_string(c.m) + " k=" + std::to_string(c.k) + " N=" + c.bound_n.str());
    }
    if (first.empty()) {
      first = c.per_prototile_counts;
    } else if (c.per_prototile_counts != first) {
      o.fail("class counts change with radius");
    }
    o.note(std::to_string(p.tile_count()) + " tiles -> " + counts + " classes");
  }
  if (orientation_bound(2, 10) != BigInt(1398102)) o.fail("N(2,10) = " + orientation_bound(2, 10).str());

  const CensusReport grid = orientation_census(gen_square_grid(30, 30));
  if (grid.classes.size() != 1 || grid.bound_n != BigInt(32) || orientation_bound(1, 4) != BigInt(32)) {
    o.fail("square grid: " + std::to_string(grid.classes.size()) + " classes, N=" + grid.bound_n.str());
  }
  int disagreements = 0;
  for (int m = 1; m <= 10; ++m) {
    for (int k = 0; k <= 20; ++k) {
      if (orientation_bound(m, k) != testing::bound_by_summation(m, k)) ++disagreements;
    }
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " closed-form/summation disagreements");
  o.note("grid 1 class <= 32; closed form = summation on 210 (m,k)");
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome structure(const std::vector<Subject>& subjects) {
  Outcome o;
  std::vector<const Subject*> all;
  for (const auto& s : subjects) all.push_back(&s);
  std::vector<Subject> ladder;
  for (double radius : kCensusRadii) {
    const auto spec = testing::penrose_spec(radius);
    ladder.push_back({"multigrid n=5 r=" + fixed(radius, 1), gen_multigrid(spec).patch, kPi / 5, spec, ""});
  }
  for (const auto& s : ladder) all.push_back(&s);

  for (const Subject* s : all) {
    const Patch& p = s->patch;
    const WormIndex idx = all_worms(p);
    std::vector<int> hits(p.tile_count(), 0);
    std::size_t total = 0;
    for (const Worm& w : idx.worms) {
      total += w.tiles.size();
      for (TileId t : w.tiles) ++hits[to_index(t)];
    }
    const auto wrong = std::count_if(hits.begin(), hits.end(), [](int h) { return h != 2; });
    if (wrong) o.fail(s->name + ": " + std::to_string(wrong) + " tiles not on exactly 2 worms");
    if (total != 2 * p.tile_count()) o.fail(s->name + ": worm lengths sum to " + std::to_string(total));
    if (s->spec) {
      if (idx.families.size() != static_cast<std::size_t>(s->spec->n)) {
        o.fail(s->name + ": " + std::to_string(idx.families.size()) + " families");
      }
      const auto expected = testing::count_grid_intersections(*s->spec);
      if (static_cast<std::int64_t>(p.tile_count()) != expected) {
        o.fail(s->name + ": " + std::to_string(p.tile_count()) + " tiles vs " + std::to_string(expected) +
               " intersections");
      }
    }
    if (!validate(p).passed()) o.fail(s->name + ": validate() not empty");
    o.note(s->name + " " + std::to_string(p.tile_count()) + " tiles");
  }
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome worm_step(const std::vector<Subject>& subjects) {
  Outcome o;
  for (const auto& s : subjects) {
    const CheckReport r = check_worm_step_orientation(s.patch, all_worms(s.patch));
    if (!r.passed()) o.fail(s.name + ": " + std::to_string(r.violations.size()) + " pairs");
    o.note(s.name + " " + *r.stat("same_prototile_pairs") + " pairs");
  }
  return o;
}

// --- 8 ---------------------------------------------------------------------

std::string full_run(const Patch& p) {
  const WormIndex idx = all_worms(p);
  std::vector<CheckReport> reports{validate(p), check_crossing_lemma(p, idx), check_cone_lemma(p, idx),
                                   check_no_loop(p, idx), check_worm_step_orientation(p, idx),
                                   check_orientation_theorem(p)};
  RenderOptions opt;
  opt.worms = true;
  opt.labels = true;
  opt.cone_worm = WormId{0};
  opt.route = travel_bfs(build_worm_graph(p, idx), TileId{0},
                         TileId{static_cast<std::int32_t>(p.tile_count() - 1)});
  return format_reports(reports) + render_svg(p, idx, opt);
}

Outcome determinism(const std::vector<Subject>& subjects) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "wormkit_acceptance";
  std::filesystem::create_directories(dir);
  const auto fresh = make_subjects();
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    const auto& s = subjects[i];
    const auto first = dir / ("p" + std::to_string(i) + "_a.patch");
    const auto second = dir / ("p" + std::to_string(i) + "_b.patch");
    save_patch(first, s.patch, s.generator);
    save_patch(second, load_patch(first), s.generator);
    if (format_patch_file(load_patch(first), s.generator) != format_patch_file(load_patch(second), s.generator) ||
        format_patch_file(s.patch, s.generator) != format_patch_file(load_patch(second), s.generator)) {
      o.fail(s.name + ": save/load/save not a fixed point");
    }
    if (full_run(s.patch) != full_run(fresh[i].patch)) o.fail(s.name + ": output differs between runs");
  }
  std::filesystem::remove_all(dir);
  o.note("patch files, reports and SVG compared byte for byte");
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<Subject> subjects = make_subjects();
  std::printf("# patches:");
  for (const auto& s : subjects) std::printf(" %s=%zu", s.name.c_str(), s.patch.tile_count());
  std::printf("\n");

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"crossing lemma on all worm pairs", [&] { return crossing(subjects); }},
      {"cone lemma at every rung", [&] { return cone(subjects); }},
      {"no loops, seed-independent worms", [&] { return loops(subjects); }},
      {"travel within ceil(2pi/alpha) worms", [&] { return travel(subjects); }},
      {"orientation census and bound N", [] { return census(); }},
      {"structural invariants", [&] { return structure(subjects); }},
      {"worm-step orientation", [&] { return worm_step(subjects); }},
      {"determinism and round trip", [&] { return determinism(subjects); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("# %d of %zu criteria failed, %.1f s\n", failures, criteria.size(), seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
