#include "wormkit/census.hpp"

#include <algorithm>
#include <numbers>
#include <tuple>

#include "wormkit/travel.hpp"

namespace wormkit {

namespace {

bool orientation_less(const Isometry& a, const Isometry& b) {
  return std::tie(a.reflected, a.rotation) < std::tie(b.reflected, b.rotation);
}

bool is_translation(const Isometry& g) {
  const double tol = tolerance().angle_eps;
  return !g.reflected && std::min(g.rotation, 2 * std::numbers::pi - g.rotation) <= tol;
}

}  // namespace

Isometry canonical_orientation(const Isometry& placement, const std::vector<Isometry>& symmetries) {
  Isometry linear = placement;
  linear.translation = Vec2{};
  Isometry best = linear;
  for (const Isometry& s : symmetries) {
    const Isometry candidate = compose(linear, s);
    if (orientation_less(candidate, best)) best = candidate;
  }
  return best;
}

CensusReport orientation_census(const Patch& patch) {
  CensusReport report;
  report.m = static_cast<int>(patch.protoset().size());
  report.alpha = patch.alpha();
  report.k = turn_budget(report.alpha);
  report.bound_n = orientation_bound(report.m, report.k);

  std::vector<std::vector<Isometry>> symmetries;
  for (const auto& proto : patch.protoset()) symmetries.push_back(symmetry_group(proto));

  struct Entry {
    int proto;
    Isometry orientation;
    TileId tile;
  };
  std::vector<Entry> entries;
  entries.reserve(patch.tile_count());
  for (const Tile& t : patch.tiles()) {
    const auto& sym = symmetries[static_cast<std::size_t>(t.prototile_id)];
    entries.push_back({t.prototile_id, canonical_orientation(t.placement, sym), t.id});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.proto, a.orientation.reflected, a.orientation.rotation, a.tile) <
           std::tie(b.proto, b.orientation.reflected, b.orientation.rotation, b.tile);
  });

  const double tol = tolerance().angle_eps;
  report.per_prototile_counts.assign(static_cast<std::size_t>(report.m), 0);
  report.per_prototile_tiles.assign(static_cast<std::size_t>(report.m), 0);
  for (const Entry& e : entries) {
    ++report.per_prototile_tiles[static_cast<std::size_t>(e.proto)];
    if (!report.classes.empty()) {
      OrientationClass& last = report.classes.back();
      if (last.prototile_id == e.proto && last.reflected == e.orientation.reflected &&
          e.orientation.rotation - last.rotation <= tol) {
        ++last.count;
        last.representative = std::min(last.representative, e.tile);
        continue;
      }
    }
    report.classes.push_back({e.proto, e.orientation.rotation, e.orientation.reflected, 1, e.tile});
    ++report.per_prototile_counts[static_cast<std::size_t>(e.proto)];
  }
  return report;
}

BigInt orientation_bound(std::int64_t m, std::int64_t k) {
  if (m < 1) throw Error("orientation bound needs m >= 1");
  if (k < 0) throw Error("orientation bound needs k >= 0");
  const BigInt base = 2 * m;
  const BigInt numerator = boost::multiprecision::pow(base, static_cast<unsigned>(k + 1)) + base - 2;
  const BigInt denominator = base - 1;
  if (numerator % denominator != 0) throw Error("internal error: inexact orientation bound");
  return numerator / denominator;
}

CheckReport check_orientation_theorem(const Patch& patch, const CensusReport& census) {
  CheckReport report;
  report.name = "census";
  for (std::size_t p = 0; p < census.per_prototile_counts.size(); ++p) {
    if (BigInt(census.per_prototile_counts[p]) <= census.bound_n) continue;
    Violation v;
    v.kind = "orientation-bound";
    v.detail = "prototile " + std::to_string(p) + " has " +
               std::to_string(census.per_prototile_counts[p]) + " orientation classes";
    report.violations.push_back(std::move(v));
  }
  report.add_stat("tiles", static_cast<std::int64_t>(patch.tile_count()));
  report.add_stat("m", static_cast<std::int64_t>(census.m));
  report.add_stat("alpha", census.alpha);
  report.add_stat("k", static_cast<std::int64_t>(census.k));
  report.add_stat("bound_n", census.bound_n.str());
  // Relative orientation of two congruent tiles: at most N^2 possibilities,
  // implied by the per-prototile bound.
  report.add_stat("pairwise_bound", BigInt(census.bound_n * census.bound_n).str());
  std::int64_t max_classes = 0;
  for (std::size_t p = 0; p < census.per_prototile_counts.size(); ++p) {
    report.add_stat("prototile_" + std::to_string(p) + "_classes", census.per_prototile_counts[p]);
    max_classes = std::max(max_classes, census.per_prototile_counts[p]);
  }
  report.add_stat("max_classes", max_classes);
  return report;
}

CheckReport check_orientation_theorem(const Patch& patch) {
  return check_orientation_theorem(patch, orientation_census(patch));
}

CheckReport check_worm_step_orientation(const Patch& patch, const WormIndex& worms) {
  CheckReport report;
  report.name = "worm-step";
  std::int64_t pairs = 0, translates = 0, reflections = 0;
  for (std::size_t wi = 0; wi < worms.worms.size(); ++wi) {
    const auto& tiles = worms.worms[wi].tiles;
    for (std::size_t a = 0; a < tiles.size(); ++a) {
      const Tile& ta = patch.tile(tiles[a]);
      for (std::size_t b = a + 1; b < tiles.size(); ++b) {
        const Tile& tb = patch.tile(tiles[b]);
        if (ta.prototile_id != tb.prototile_id) continue;
        ++pairs;
        const auto maps = congruences(ta.shape, tb.shape);
        if (std::any_of(maps.begin(), maps.end(), is_translation)) {
          ++translates;
          continue;
        }
        if (std::any_of(maps.begin(), maps.end(), [](const Isometry& g) { return g.reflected; })) {
          ++reflections;
          continue;
        }
        Violation v;
        v.kind = "worm-step-rotation";
        v.tiles = {to_int(ta.id), to_int(tb.id)};
        v.worms = {static_cast<std::int64_t>(wi)};
        v.at = tb.shape.centroid();
        v.detail = "tiles related only by a proper rotation";
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.add_stat("same_prototile_pairs", pairs);
  report.add_stat("translates", translates);
  report.add_stat("reflections", reflections);
  return report;
}

}  // namespace wormkit
