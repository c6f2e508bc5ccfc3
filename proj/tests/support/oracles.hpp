#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that does not share code with the library function it is compared to.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "wormkit/census.hpp"
#include "wormkit/generators.hpp"
#include "wormkit/tiling.hpp"
#include "wormkit/worms.hpp"

namespace wormkit::testing {

inline TileId grid_tile(int w, int row, int col) { return TileId{row * w + col}; }

/// 1 + sum_{n=0}^{k} (2m)^n by repeated multiplication.
inline BigInt bound_by_summation(std::int64_t m, std::int64_t k) {
  BigInt sum = 1, term = 1;
  for (std::int64_t n = 0; n <= k; ++n) {
    sum += term;
    term *= 2 * m;
  }
  return sum;
}

/// Translation classes from edge data alone: a parallelogram is the
/// Minkowski sum of its two edge segments, so tiles are translates exactly
/// when their unordered pairs of edge lines (with lengths) agree.
/// Returns, per prototile id, the number of distinct classes.
inline std::map<int, int> translation_classes(const Patch& patch, double tol = 1e-7) {
  using Key = std::tuple<int, long, long, long, long>;
  auto quant = [tol](double v) { return std::lround(v / tol); };
  auto line_key = [&](const Vec2& e) {
    double a = std::atan2(e.y(), e.x());
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi - tol) a = 0;
    return std::pair{quant(a), quant(std::hypot(e.x(), e.y()))};
  };
  std::set<Key> keys;
  for (const Tile& t : patch.tiles()) {
    auto a = line_key(t.shape.u());
    auto b = line_key(t.shape.v());
    if (b < a) std::swap(a, b);
    keys.insert({t.prototile_id, a.first, a.second, b.first, b.second});
  }
  std::map<int, int> out;
  for (const auto& k : keys) ++out[std::get<0>(k)];
  return out;
}

/// Fewest worms connecting s to t, by growing the set of tiles reachable
/// with j worms (no graph, no BFS queue).
inline int min_worms_by_expansion(const WormIndex& worms, TileId s, TileId t) {
  std::set<std::int32_t> reached{to_int(s)};
  std::set<std::int32_t> used_worms;
  for (int j = 1; j <= static_cast<int>(worms.worms.size()); ++j) {
    std::set<std::int32_t> next = reached;
    for (std::int32_t tile : reached) {
      for (WormId w : worms.tile_worms[static_cast<std::size_t>(tile)]) {
        if (!used_worms.insert(to_int(w)).second) continue;
        for (TileId x : worms.worm(w).tiles) next.insert(to_int(x));
      }
    }
    if (next.count(to_int(t))) return j;
    if (next == reached) return -1;
    reached = std::move(next);
  }
  return -1;
}

/// Number of line pairs of a multigrid meeting within `radius`, solving each
/// 2x2 system by Cramer's rule on explicit normals.
inline std::int64_t count_grid_intersections(const MultigridSpec& spec) {
  const double step = (spec.n % 2 ? 2.0 : 1.0) * std::numbers::pi / spec.n;
  const int range = static_cast<int>(std::ceil(spec.radius)) + 3;
  std::int64_t count = 0;
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const double a1 = std::cos(step * i), b1 = std::sin(step * i);
      const double a2 = std::cos(step * j), b2 = std::sin(step * j);
      const double det = a1 * b2 - a2 * b1;
      for (int p = -range; p <= range; ++p) {
        for (int q = -range; q <= range; ++q) {
          const double c1 = spec.offsets[i] + p, c2 = spec.offsets[j] + q;
          const double x = (c1 * b2 - c2 * b1) / det;
          const double y = (a1 * c2 - a2 * c1) / det;
          if (x * x + y * y <= spec.radius * spec.radius) ++count;
        }
      }
    }
  }
  return count;
}

inline MultigridSpec penrose_spec(double radius) {
  return {5, {0.2, 0.2, 0.2, 0.2, 0.2}, radius, 0};
}

inline MultigridSpec ammann_beenker_spec(double radius) {
  return {4, {0.1, 0.2, 0.3, 0.4}, radius, 0};
}

/// Tiles whose centroid lies within a third of the patch's extent from the
/// centroid of all tiles.
inline std::vector<TileId> central_third(const Patch& patch) {
  Vec2 center;
  for (const Tile& t : patch.tiles()) center += t.shape.centroid();
  center = center / static_cast<double>(patch.tile_count());
  double extent = 0;
  for (const Tile& t : patch.tiles()) extent = std::max(extent, distance(t.shape.centroid(), center));
  std::vector<TileId> out;
  for (const Tile& t : patch.tiles()) {
    if (distance(t.shape.centroid(), center) <= extent / 3) out.push_back(t.id);
  }
  return out;
}

}  // namespace wormkit::testing
