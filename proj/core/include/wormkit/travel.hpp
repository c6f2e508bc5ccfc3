#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wormkit/ids.hpp"
#include "wormkit/tiling.hpp"
#include "wormkit/worms.hpp"

namespace wormkit {

/// Worms as nodes, crossing tiles as edges.
class WormGraph {
 public:
  struct Link {
    WormId a;  // a < b
    WormId b;
    TileId tile;
  };
  struct Neighbor {
    WormId worm;
    TileId tile;
  };

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  const std::vector<Link>& links() const noexcept { return links_; }
  /// Neighbors of `w` sorted by worm id.
  const std::vector<Neighbor>& neighbors(WormId w) const { return adjacency_.at(to_index(w)); }
  /// Crossing tile of two worms, if they cross.
  std::optional<TileId> crossing(WormId a, WormId b) const;
  /// The two worms through `tile`, ascending.
  std::array<WormId, 2> worms_of(TileId tile) const;

 private:
  friend WormGraph build_worm_graph(const Patch& patch, const WormIndex& worms);
  std::vector<Link> links_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::array<WormId, 2>> tile_worms_;
};

/// One link per tile. Throws Error if two worms share more than one tile or
/// a tile lies on two worms of the same family.
WormGraph build_worm_graph(const Patch& patch, const WormIndex& worms);

/// A walk from `start` to `end` along `worms`, switching worm at each turn
/// tile. turns[i] is the crossing tile of worms[i] and worms[i + 1].
struct TravelRoute {
  std::vector<WormId> worms;
  std::vector<TileId> turns;
  TileId start{};
  TileId end{};

  std::size_t worm_count() const noexcept { return worms.size(); }
};

/// Outcome of a constructive travel query.
struct TravelResult {
  std::optional<TravelRoute> route;
  /// Why no route was produced (empty on success).
  std::string diagnostic;
};

/// Route with the fewest worms, found by breadth-first search from the two
/// worms through `s`. Ties resolve to the lowest worm ids. nullopt when `t`
/// is not reachable.
std::optional<TravelRoute> travel_bfs(const WormGraph& graph, TileId s, TileId t);

/// Which side of a worm a tile is on.
enum class Side { kOn, kLeft, kRight, kUnreachable };

const char* to_string(Side side) noexcept;

/// Side label of every tile relative to `worm`. Left and right follow the
/// worm's tile order. A tile gets kUnreachable when its component of the
/// patch minus the worm touches both sides of the worm, or none.
std::vector<Side> side_map(const Patch& patch, const WormIndex& worms, WormId worm);

Side side_of_worm(const Patch& patch, const WormIndex& worms, WormId worm, TileId tile);

/// The worm sweep: start on a worm through `s`; while `t` is neither on the
/// current worm nor on a worm crossing it, find two worms crossing the
/// current worm at adjacent tiles with `t` between them, and continue on the
/// one whose crossing is farther from the current reference tile.
///
/// `start_worm` must pass through `s`; by default the lower-id worm of `s`
/// is used. The sweep stops after turn_budget(alpha) worms.
TravelResult travel_constructive(const Patch& patch, const WormIndex& worms, TileId s, TileId t,
                                 std::optional<WormId> start_worm = std::nullopt);

/// ceil(2 pi / alpha). Throws Error if alpha <= 0.
int turn_budget(double alpha);

/// Checks that a route is well formed: consecutive worms cross at the
/// recorded turns, `start` lies on the first worm and `end` on the last.
bool route_is_valid(const WormIndex& worms, const TravelRoute& route);

/// The tiles visited when walking the route worm by worm.
std::vector<TileId> route_tiles(const WormIndex& worms, const TravelRoute& route);

}  // namespace wormkit
