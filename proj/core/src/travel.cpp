#include "wormkit/travel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <unordered_map>

namespace wormkit {

namespace {

constexpr WormId kNone{-1};

Vec2 edge_midpoint(const Patch& patch, EdgeId e) {
  const auto [a, b] = patch.edge_endpoints(e);
  return (a + b) * 0.5;
}

/// Side label of a non-rung edge of worm.tiles[pos], relative to the worm's
/// direction of travel.
Side side_edge_label(const Patch& patch, const Worm& worm, std::size_t pos, EdgeId edge) {
  const Vec2 travel = edge_midpoint(patch, worm.rungs[pos + 1]) - edge_midpoint(patch, worm.rungs[pos]);
  const Vec2 center = patch.tile(worm.tiles[pos]).shape.centroid();
  return cross(travel, edge_midpoint(patch, edge) - center) > 0 ? Side::kLeft : Side::kRight;
}

/// Side labels of every non-rung edge along the worm.
std::unordered_map<std::int32_t, Side> worm_side_edges(const Patch& patch, const Worm& worm) {
  std::unordered_map<std::int32_t, Side> out;
  for (std::size_t i = 0; i < worm.tiles.size(); ++i) {
    const Tile& tile = patch.tile(worm.tiles[i]);
    const int rung_class = *patch.edge_slot(tile.id, worm.rungs[i]) % 2;
    for (int k = 0; k < 4; ++k) {
      if (k % 2 == rung_class) continue;
      out.emplace(to_int(tile.edges[k]), side_edge_label(patch, worm, i, tile.edges[k]));
    }
  }
  return out;
}

std::size_t position_in(const Worm& w, TileId t) {
  const auto it = std::find(w.tiles.begin(), w.tiles.end(), t);
  if (it == w.tiles.end()) throw Error("tile not on worm");
  return static_cast<std::size_t>(it - w.tiles.begin());
}

bool on_worm(const WormIndex& worms, WormId w, TileId t) {
  const auto& pair = worms.tile_worms.at(to_index(t));
  return pair[0] == w || pair[1] == w;
}

std::size_t index_distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

// --- Worm graph -------------------------------------------------------------

std::optional<TileId> WormGraph::crossing(WormId a, WormId b) const {
  for (const auto& n : neighbors(a)) {
    if (n.worm == b) return n.tile;
  }
  return std::nullopt;
}

std::array<WormId, 2> WormGraph::worms_of(TileId tile) const {
  return tile_worms_.at(to_index(tile));
}

WormGraph build_worm_graph(const Patch& patch, const WormIndex& worms) {
  WormGraph g;
  g.adjacency_.resize(worms.worms.size());
  g.tile_worms_.reserve(patch.tile_count());
  std::map<std::pair<std::int32_t, std::int32_t>, TileId> seen;

  for (const Tile& t : patch.tiles()) {
    auto pair = worms.tile_worms.at(to_index(t.id));
    if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
    g.tile_worms_.push_back(pair);
    const auto [a, b] = pair;
    if (a == b || worms.worm(a).family == worms.worm(b).family) {
      throw Error("tile " + std::to_string(to_int(t.id)) + " lies on two worms of one family");
    }
    auto [it, inserted] = seen.emplace(std::pair{to_int(a), to_int(b)}, t.id);
    if (!inserted) {
      throw Error("worms " + std::to_string(to_int(a)) + " and " + std::to_string(to_int(b)) +
                  " cross more than once");
    }
    g.links_.push_back({a, b, t.id});
    g.adjacency_[to_index(a)].push_back({b, t.id});
    g.adjacency_[to_index(b)].push_back({a, t.id});
  }
  std::sort(g.links_.begin(), g.links_.end(), [](const auto& x, const auto& y) {
    return std::pair{x.a, x.b} < std::pair{y.a, y.b};
  });
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const auto& x, const auto& y) { return x.worm < y.worm; });
  }
  return g;
}

// --- BFS oracle -------------------------------------------------------------

std::optional<TravelRoute> travel_bfs(const WormGraph& graph, TileId s, TileId t) {
  const auto sources = graph.worms_of(s);
  const auto targets = graph.worms_of(t);
  auto is_target = [&](WormId w) { return w == targets[0] || w == targets[1]; };

  TravelRoute route;
  route.start = s;
  route.end = t;

  for (WormId w : sources) {
    if (is_target(w)) {
      route.worms = {w};
      return route;
    }
  }

  std::vector<WormId> parent(graph.node_count(), kNone);
  std::vector<bool> visited(graph.node_count(), false);
  std::vector<WormId> layer(sources.begin(), sources.end());
  for (WormId w : layer) visited[to_index(w)] = true;

  while (!layer.empty()) {
    std::vector<WormId> next;
    for (WormId w : layer) {
      for (const auto& n : graph.neighbors(w)) {
        if (visited[to_index(n.worm)]) continue;
        visited[to_index(n.worm)] = true;
        parent[to_index(n.worm)] = w;
        next.push_back(n.worm);
      }
    }
    std::sort(next.begin(), next.end());
    for (WormId w : next) {
      if (!is_target(w)) continue;
      std::vector<WormId> path{w};
      while (parent[to_index(path.back())] != kNone) path.push_back(parent[to_index(path.back())]);
      std::reverse(path.begin(), path.end());
      route.worms = path;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        route.turns.push_back(*graph.crossing(path[i], path[i + 1]));
      }
      return route;
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

// --- Sides ------------------------------------------------------------------

const char* to_string(Side side) noexcept {
  switch (side) {
    case Side::kOn: return "on";
    case Side::kLeft: return "left";
    case Side::kRight: return "right";
    case Side::kUnreachable: return "unreachable";
  }
  return "?";
}

std::vector<Side> side_map(const Patch& patch, const WormIndex& worms, WormId worm_id) {
  const Worm& worm = worms.worm(worm_id);
  const auto edge_sides = worm_side_edges(patch, worm);
  const std::size_t n = patch.tile_count();

  std::vector<Side> label(n, Side::kUnreachable);
  std::vector<bool> done(n, false);
  for (TileId t : worm.tiles) {
    label[to_index(t)] = Side::kOn;
    done[to_index(t)] = true;
  }

  std::vector<std::size_t> component;
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (done[seed]) continue;
    component.clear();
    bool left = false, right = false;
    done[seed] = true;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      component.push_back(cur);
      const Tile& tile = patch.tiles()[cur];
      for (EdgeId e : tile.edges) {
        const auto other = adjacent_through_edge(patch, tile.id, e);
        if (!other) continue;
        const std::size_t o = to_index(*other);
        if (label[o] == Side::kOn) {
          (edge_sides.at(to_int(e)) == Side::kLeft ? left : right) = true;
          continue;
        }
        if (!done[o]) {
          done[o] = true;
          queue.push_back(o);
        }
      }
    }
    const Side side = left == right ? Side::kUnreachable : (left ? Side::kLeft : Side::kRight);
    for (std::size_t c : component) label[c] = side;
  }
  return label;
}

Side side_of_worm(const Patch& patch, const WormIndex& worms, WormId worm, TileId tile) {
  return side_map(patch, worms, worm).at(to_index(tile));
}

// --- Constructive sweep -----------------------------------------------------

int turn_budget(double alpha) {
  if (!(alpha > 0)) throw Error("alpha must be positive");
  // The slack absorbs round-off in 2pi/alpha for alpha = pi/q.
  return static_cast<int>(std::ceil(2.0 * std::numbers::pi / alpha - 1e-9));
}

TravelResult travel_constructive(const Patch& patch, const WormIndex& worms, TileId s, TileId t,
                                 std::optional<WormId> start_worm) {
  TravelResult result;
  const int budget = turn_budget(patch.alpha());
  const auto& s_worms = worms.tile_worms.at(to_index(s));
  const auto& t_worms = worms.tile_worms.at(to_index(t));

  WormId current = start_worm.value_or(std::min(s_worms[0], s_worms[1]));
  if (!on_worm(worms, current, s)) {
    result.diagnostic = "start worm does not pass through the start tile";
    return result;
  }

  TravelRoute route;
  route.start = s;
  route.end = t;
  route.worms = {current};
  TileId reference = s;

  for (;;) {
    if (on_worm(worms, current, t)) {
      result.route = std::move(route);
      return result;
    }
    const Worm& w = worms.worm(current);
    const std::size_t ref_pos = position_in(w, reference);

    std::vector<WormId> crossers(w.tiles.size());
    for (std::size_t j = 0; j < w.tiles.size(); ++j) crossers[j] = worms.other_worm(w.tiles[j], current);

    // t on a crossing worm: one more turn finishes the route.
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < crossers.size(); ++j) {
      if (crossers[j] != t_worms[0] && crossers[j] != t_worms[1]) continue;
      if (!hit || index_distance(j, ref_pos) < index_distance(*hit, ref_pos)) hit = j;
    }
    if (hit) {
      if (static_cast<int>(route.worms.size()) + 1 > budget) {
        result.diagnostic = "turn budget of " + std::to_string(budget) + " worms exceeded";
        return result;
      }
      route.turns.push_back(w.tiles[*hit]);
      route.worms.push_back(crossers[*hit]);
      result.route = std::move(route);
      return result;
    }
    if (static_cast<int>(route.worms.size()) >= budget) {
      result.diagnostic = "turn budget of " + std::to_string(budget) + " worms exceeded";
      return result;
    }

    // between[j]: t lies on the side of crosser j that holds w.tiles[j+1..].
    std::vector<std::optional<bool>> between(crossers.size());
    for (std::size_t j = 0; j < crossers.size(); ++j) {
      const Side t_side = side_of_worm(patch, worms, crossers[j], t);
      if (t_side != Side::kLeft && t_side != Side::kRight) continue;
      const Worm& x = worms.worm(crossers[j]);
      const Side ahead = side_edge_label(patch, x, position_in(x, w.tiles[j]), w.rungs[j + 1]);
      between[j] = t_side == ahead;
    }

    std::optional<std::size_t> bracket;
    for (std::size_t j = 0; j + 1 < crossers.size(); ++j) {
      if (between[j] != std::optional<bool>(true) || between[j + 1] != std::optional<bool>(false)) continue;
      const auto dist = [&](std::size_t i) {
        return std::min(index_distance(i, ref_pos), index_distance(i + 1, ref_pos));
      };
      if (!bracket || dist(j) < dist(*bracket)) bracket = j;
    }
    if (!bracket) {
      result.diagnostic = "boundary truncation: no pair of crossing worms of worm " +
                          std::to_string(to_int(current)) + " brackets the target tile";
      return result;
    }

    const std::size_t lo = *bracket, hi = lo + 1;
    const std::size_t far = index_distance(lo, ref_pos) > index_distance(hi, ref_pos) ? lo : hi;
    const WormId next = crossers[far];
    if (std::find(route.worms.begin(), route.worms.end(), next) != route.worms.end()) {
      result.diagnostic = "sweep returned to worm " + std::to_string(to_int(next));
      return result;
    }
    route.turns.push_back(w.tiles[far]);
    route.worms.push_back(next);
    reference = w.tiles[far];
    current = next;
  }
}

// --- Route helpers ----------------------------------------------------------

bool route_is_valid(const WormIndex& worms, const TravelRoute& route) {
  if (route.worms.empty() || route.turns.size() + 1 != route.worms.size()) return false;
  if (!on_worm(worms, route.worms.front(), route.start)) return false;
  if (!on_worm(worms, route.worms.back(), route.end)) return false;
  for (std::size_t i = 0; i < route.turns.size(); ++i) {
    if (route.worms[i] == route.worms[i + 1]) return false;
    if (!on_worm(worms, route.worms[i], route.turns[i])) return false;
    if (!on_worm(worms, route.worms[i + 1], route.turns[i])) return false;
  }
  return true;
}

std::vector<TileId> route_tiles(const WormIndex& worms, const TravelRoute& route) {
  std::vector<TileId> out;
  TileId from = route.start;
  for (std::size_t i = 0; i < route.worms.size(); ++i) {
    const Worm& w = worms.worm(route.worms[i]);
    const TileId to = i < route.turns.size() ? route.turns[i] : route.end;
    const std::size_t a = position_in(w, from);
    const std::size_t b = position_in(w, to);
    if (a <= b) {
      for (std::size_t k = a; k <= b; ++k) out.push_back(w.tiles[k]);
    } else {
      for (std::size_t k = a + 1; k-- > b;) out.push_back(w.tiles[k]);
    }
    if (i + 1 < route.worms.size()) out.pop_back();
    from = to;
  }
  return out;
}

}  // namespace wormkit
