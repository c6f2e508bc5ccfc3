#pragma once

#include <array>
#include <vector>

#include "wormkit/geometry.hpp"
#include "wormkit/ids.hpp"
#include "wormkit/report.hpp"
#include "wormkit/tiling.hpp"

namespace wormkit {

/// A maximal chain of tiles linked through parallel edges.
///
/// `rungs[i]` is the edge entering `tiles[i]` and `rungs[i + 1]` the edge
/// leaving it, so `rungs.size() == tiles.size() + 1`; the first and last rung
/// lie on the patch boundary unless the chain closed on itself.
struct Worm {
  std::vector<TileId> tiles;
  std::vector<EdgeId> rungs;
  /// Unit vector along the rungs, line angle in [0, pi).
  Vec2 direction;
  FamilyId family{};
  /// Set when tracing returned to an already visited tile.
  bool looped = false;
};

struct WormFamily {
  FamilyId id{};
  Vec2 direction;
  std::vector<WormId> worms;
};

/// Every worm of a patch, grouped into families.
struct WormIndex {
  std::vector<Worm> worms;
  std::vector<WormFamily> families;
  /// tile_worms[t][c]: worm through tile t whose rungs are the tile's edges
  /// of class c (c = 0 for edges 0/2, c = 1 for edges 1/3).
  std::vector<std::array<WormId, 2>> tile_worms;
  /// The worm carrying each edge as a rung.
  std::vector<WormId> edge_worm;

  const Worm& worm(WormId id) const { return worms.at(to_index(id)); }
  /// The worm through `tile` other than `w`. `w` must pass through `tile`.
  WormId other_worm(TileId tile, WormId w) const;
};

/// Traces the worm given by `tile` and its edge `edge` in both directions
/// until the patch boundary. The returned sequence is oriented so that its
/// first tile id is not larger than its last, which makes the result
/// independent of the seed.
///
/// Throws PatchError if `edge` is not an edge of `tile`.
Worm trace_worm(const Patch& patch, TileId tile, EdgeId edge);

/// Extracts all worms. Worm ids are assigned in order of the lowest tile id
/// they contain (tile edge class 0 before class 1); family ids in order of
/// first appearance.
WormIndex all_worms(const Patch& patch);

/// Tiles common to both worms, ascending.
std::vector<TileId> intersect_worms(const Worm& a, const Worm& b);

/// Two worms cross at most once, and worms of one family never cross.
CheckReport check_crossing_lemma(const Patch& patch, const WormIndex& worms);
CheckReport check_crossing_lemma(const Patch& patch);

/// For every rung e = [e1, e2] of `worm`, no tile of the worm meets the open
/// cones e1 + C(e1 - e2, alpha) and e2 + C(e2 - e1, alpha), alpha being the
/// patch's minimum interior angle.
CheckReport check_cone_lemma(const Patch& patch, const Worm& worm);
/// Cone check over every worm of the patch.
CheckReport check_cone_lemma(const Patch& patch, const WormIndex& worms);

/// No worm trace revisits a tile.
CheckReport check_no_loop(const Patch& patch, const WormIndex& worms);
CheckReport check_no_loop(const Patch& patch);

/// True if the closed convex polygon `p` meets the open cone `c`, with the
/// cone's half-angle shrunk by angle_eps. Sets `witness` to a point of the
/// intersection when it returns true.
bool pgram_meets_cone(const Pgram& p, const Cone& c, Vec2* witness = nullptr);

}  // namespace wormkit
