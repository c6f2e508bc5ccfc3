#include "wormkit/worms.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <unordered_set>

namespace wormkit {

namespace {

constexpr WormId kNoWorm{-1};

struct HalfTrace {
  std::vector<TileId> tiles;  // excluding the seed
  std::vector<EdgeId> rungs;  // edges crossed, ending with the terminal rung
  bool looped = false;
};

HalfTrace trace_half(const Patch& patch, TileId seed, EdgeId out,
                     std::unordered_set<std::int32_t>& visited) {
  HalfTrace h;
  TileId cur = seed;
  for (;;) {
    h.rungs.push_back(out);
    const auto next = adjacent_through_edge(patch, cur, out);
    if (!next) break;
    if (!visited.insert(to_int(*next)).second) {
      h.looped = true;
      break;
    }
    h.tiles.push_back(*next);
    out = opposite_edge(patch, *next, out);
    cur = *next;
  }
  return h;
}

double family_tolerance(const Patch& patch, EdgeId e) {
  const auto [a, b] = patch.edge_endpoints(e);
  return tolerance().angle_eps + tolerance().eps / std::max(distance(a, b), tolerance().eps);
}

std::vector<Vec2> ccw_polygon(const Pgram& p) {
  auto v = p.vertices();
  if (cross(p.u(), p.v()) < 0) std::swap(v[1], v[3]);
  return {v.begin(), v.end()};
}

/// Keeps the part of `poly` strictly left of the directed line apex + t*dir.
std::vector<Vec2> clip_left(const std::vector<Vec2>& poly, const Vec2& apex, const Vec2& dir) {
  std::vector<Vec2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    const double da = cross(dir, a - apex);
    const double db = cross(dir, b - apex);
    if (da >= 0) out.push_back(a);
    if ((da >= 0) != (db >= 0)) {
      const double t = da / (da - db);
      out.push_back(a + (b - a) * t);
    }
  }
  return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
  double s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    s += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return 0.5 * s;
}

Vec2 polygon_mean(const std::vector<Vec2>& poly) {
  Vec2 s;
  for (const auto& p : poly) s += p;
  return s / static_cast<double>(poly.size());
}

bool convex_meets_cone(const std::vector<Vec2>& poly, const Vec2& apex, const Vec2& axis,
                       double half_angle, Vec2* witness) {
  if (half_angle <= 0) return false;
  if (half_angle > std::numbers::pi / 2) {
    const double h = half_angle / 2;
    return convex_meets_cone(poly, apex, rotated(axis, h), h, witness) ||
           convex_meets_cone(poly, apex, rotated(axis, -h), h, witness);
  }
  const Vec2 unit = axis / norm(axis);
  const Vec2 lower = rotated(unit, -half_angle);
  const Vec2 upper = rotated(unit, half_angle);
  // Interior: left of `lower` and right of `upper`.
  auto clipped = clip_left(poly, apex, lower);
  if (clipped.size() < 3) return false;
  clipped = clip_left(clipped, apex, -upper);
  if (clipped.size() < 3) return false;
  if (std::abs(polygon_area(clipped)) <= tolerance().eps) return false;
  if (witness) *witness = polygon_mean(clipped);
  return true;
}

}  // namespace

WormId WormIndex::other_worm(TileId tile, WormId w) const {
  const auto& pair = tile_worms.at(to_index(tile));
  if (pair[0] == w) return pair[1];
  if (pair[1] == w) return pair[0];
  throw Error("worm " + std::to_string(to_int(w)) + " does not pass through tile " +
              std::to_string(to_int(tile)));
}

Worm trace_worm(const Patch& patch, TileId tile, EdgeId edge) {
  const EdgeId back = opposite_edge(patch, tile, edge);  // validates edge ∈ tile

  std::unordered_set<std::int32_t> visited{to_int(tile)};
  HalfTrace fwd = trace_half(patch, tile, edge, visited);
  HalfTrace bwd = trace_half(patch, tile, back, visited);

  Worm w;
  w.looped = fwd.looped || bwd.looped;
  w.tiles.assign(bwd.tiles.rbegin(), bwd.tiles.rend());
  w.tiles.push_back(tile);
  w.tiles.insert(w.tiles.end(), fwd.tiles.begin(), fwd.tiles.end());
  w.rungs.assign(bwd.rungs.rbegin(), bwd.rungs.rend());
  w.rungs.insert(w.rungs.end(), fwd.rungs.begin(), fwd.rungs.end());

  const bool reverse = w.tiles.front() != w.tiles.back()
                           ? w.tiles.front() > w.tiles.back()
                           : w.rungs.front() > w.rungs.back();
  if (reverse) {
    std::reverse(w.tiles.begin(), w.tiles.end());
    std::reverse(w.rungs.begin(), w.rungs.end());
  }

  const auto [a, b] = patch.edge_endpoints(edge);
  w.direction = sign_normalized_direction(b - a);
  return w;
}

WormIndex all_worms(const Patch& patch) {
  WormIndex index;
  index.tile_worms.assign(patch.tile_count(), {kNoWorm, kNoWorm});
  index.edge_worm.assign(patch.edges().size(), kNoWorm);
  std::vector<double> family_angles;

  for (const Tile& t : patch.tiles()) {
    for (int cls = 0; cls < 2; ++cls) {
      if (index.tile_worms[to_index(t.id)][cls] != kNoWorm) continue;

      Worm w = trace_worm(patch, t.id, t.edges[cls]);
      const auto id = id_from_index<WormId>(index.worms.size());
      for (std::size_t i = 0; i < w.tiles.size(); ++i) {
        const auto slot = patch.edge_slot(w.tiles[i], w.rungs[i]);
        auto& entry = index.tile_worms[to_index(w.tiles[i])][*slot % 2];
        if (entry != kNoWorm) throw Error("inconsistent worm trace through tile " +
                                          std::to_string(to_int(w.tiles[i])));
        entry = id;
      }
      for (EdgeId e : w.rungs) index.edge_worm[to_index(e)] = id;

      const double angle = line_angle(w.direction);
      const double tol = family_tolerance(patch, t.edges[cls]);
      std::size_t fam = 0;
      while (fam < family_angles.size() &&
             line_angle_distance(family_angles[fam], angle) > tol) {
        ++fam;
      }
      if (fam == family_angles.size()) {
        family_angles.push_back(angle);
        index.families.push_back({id_from_index<FamilyId>(fam), w.direction, {}});
      }
      w.family = id_from_index<FamilyId>(fam);
      index.families[fam].worms.push_back(id);
      index.worms.push_back(std::move(w));
    }
  }
  return index;
}

std::vector<TileId> intersect_worms(const Worm& a, const Worm& b) {
  std::vector<TileId> sa = a.tiles, sb = b.tiles, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

CheckReport check_crossing_lemma(const Patch& patch, const WormIndex& worms) {
  CheckReport report;
  report.name = "crossing";

  std::vector<std::vector<TileId>> sorted;
  sorted.reserve(worms.worms.size());
  for (const auto& w : worms.worms) {
    auto s = w.tiles;
    std::sort(s.begin(), s.end());
    sorted.push_back(std::move(s));
  }

  std::int64_t pairs = 0, crossing_pairs = 0, max_common = 0;
  std::vector<TileId> common;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      ++pairs;
      common.clear();
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(common));
      if (common.empty()) continue;
      ++crossing_pairs;
      max_common = std::max<std::int64_t>(max_common, static_cast<std::int64_t>(common.size()));

      const bool same_family = worms.worms[i].family == worms.worms[j].family;
      if (!same_family && common.size() == 1) continue;
      Violation v;
      v.kind = same_family ? "same-family-crossing" : "multiple-crossings";
      for (TileId t : common) v.tiles.push_back(to_int(t));
      v.worms = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
      v.at = patch.tile(common.front()).shape.centroid();
      v.detail = std::to_string(common.size()) + " common tiles";
      report.violations.push_back(std::move(v));
    }
  }
  report.add_stat("worms", static_cast<std::int64_t>(worms.worms.size()));
  report.add_stat("families", static_cast<std::int64_t>(worms.families.size()));
  report.add_stat("pairs_checked", pairs);
  report.add_stat("crossing_pairs", crossing_pairs);
  report.add_stat("max_common_tiles", max_common);
  return report;
}

CheckReport check_crossing_lemma(const Patch& patch) {
  return check_crossing_lemma(patch, all_worms(patch));
}

bool pgram_meets_cone(const Pgram& p, const Cone& c, Vec2* witness) {
  for (const Vec2& v : p.vertices()) {
    if (c.contains(v)) {
      if (witness) *witness = v;
      return true;
    }
  }
  return convex_meets_cone(ccw_polygon(p), c.apex(), c.axis(),
                           c.half_angle() - tolerance().angle_eps, witness);
}

namespace {

void cone_check_into(const Patch& patch, const Worm& worm, std::int64_t worm_id,
                     CheckReport& report, std::int64_t& tests) {
  const double alpha = patch.alpha();
  for (std::size_t r = 0; r < worm.rungs.size(); ++r) {
    const auto [e1, e2] = patch.edge_endpoints(worm.rungs[r]);
    const Cone cones[2] = {Cone(e1, e1 - e2, alpha), Cone(e2, e2 - e1, alpha)};
    for (int ci = 0; ci < 2; ++ci) {
      for (TileId t : worm.tiles) {
        ++tests;
        Vec2 witness;
        if (!pgram_meets_cone(patch.tile(t).shape, cones[ci], &witness)) continue;
        Violation v;
        v.kind = "cone";
        v.tiles = {to_int(t)};
        if (worm_id >= 0) v.worms = {worm_id};
        v.at = witness;
        v.detail = "rung " + std::to_string(r) + " cone C" + std::to_string(ci + 1);
        report.violations.push_back(std::move(v));
      }
    }
  }
}

}  // namespace

CheckReport check_cone_lemma(const Patch& patch, const Worm& worm) {
  CheckReport report;
  report.name = "cone";
  std::int64_t tests = 0;
  cone_check_into(patch, worm, -1, report, tests);
  report.add_stat("alpha", patch.alpha());
  report.add_stat("rungs", static_cast<std::int64_t>(worm.rungs.size()));
  report.add_stat("tile_cone_tests", tests);
  return report;
}

CheckReport check_cone_lemma(const Patch& patch, const WormIndex& worms) {
  CheckReport report;
  report.name = "cone";
  std::int64_t tests = 0, rungs = 0;
  for (std::size_t i = 0; i < worms.worms.size(); ++i) {
    cone_check_into(patch, worms.worms[i], static_cast<std::int64_t>(i), report, tests);
    rungs += static_cast<std::int64_t>(worms.worms[i].rungs.size());
  }
  report.add_stat("alpha", patch.alpha());
  report.add_stat("worms", static_cast<std::int64_t>(worms.worms.size()));
  report.add_stat("rungs", rungs);
  report.add_stat("tile_cone_tests", tests);
  return report;
}

CheckReport check_no_loop(const Patch& patch, const WormIndex& worms) {
  CheckReport report;
  report.name = "loop";
  std::int64_t total_length = 0;
  for (std::size_t i = 0; i < worms.worms.size(); ++i) {
    const Worm& w = worms.worms[i];
    total_length += static_cast<std::int64_t>(w.tiles.size());
    auto sorted = w.tiles;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (!w.looped && dup == sorted.end()) continue;
    Violation v;
    v.kind = "loop";
    const TileId at = dup != sorted.end() ? *dup : w.tiles.front();
    v.tiles = {to_int(at)};
    v.worms = {static_cast<std::int64_t>(i)};
    v.at = patch.tile(at).shape.centroid();
    v.detail = "worm trace revisits a tile";
    report.violations.push_back(std::move(v));
  }
  report.add_stat("worms", static_cast<std::int64_t>(worms.worms.size()));
  report.add_stat("total_worm_length", total_length);
  report.add_stat("tiles", static_cast<std::int64_t>(patch.tile_count()));
  return report;
}

CheckReport check_no_loop(const Patch& patch) { return check_no_loop(patch, all_worms(patch)); }

}  // namespace wormkit
