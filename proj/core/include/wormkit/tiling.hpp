#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "wormkit/geometry.hpp"
#include "wormkit/ids.hpp"
#include "wormkit/report.hpp"

namespace wormkit {

class PatchError : public Error {
 public:
  using Error::Error;
};

/// A placed parallelogram. Edge k joins vertices k and k+1 (mod 4); edges k
/// and k+2 are opposite, so edges 0/2 run along u and edges 1/3 along v.
struct Tile {
  TileId id;
  Pgram shape;
  int prototile_id = 0;
  /// Maps protoset[prototile_id] onto `shape`.
  Isometry placement;
  std::array<VertexId, 4> vertices;
  std::array<EdgeId, 4> edges;
};

/// A segment between two snapped vertices with one (boundary) or two
/// (interior) incident tiles.
struct Edge {
  EdgeId id;
  std::array<VertexId, 2> endpoints;  // ascending
  std::array<TileId, 2> tiles;
  int tile_count = 0;

  bool is_boundary() const noexcept { return tile_count == 1; }
};

/// A finite vertex-to-vertex parallelogram patch. Immutable once built.
class Patch {
 public:
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
  /// Congruence-class representatives, anchored at the origin, in order of
  /// first occurrence.
  const std::vector<Pgram>& protoset() const noexcept { return protoset_; }
  /// Minimum interior angle over the protoset, radians.
  double alpha() const noexcept { return alpha_; }

  std::size_t tile_count() const noexcept { return tiles_.size(); }
  const Tile& tile(TileId id) const;
  const Edge& edge(EdgeId id) const;
  const Vec2& vertex(VertexId id) const { return vertices_.at(to_index(id)); }
  std::pair<Vec2, Vec2> edge_endpoints(EdgeId id) const;

  /// Local slot (0..3) of `edge` within `tile`, or nullopt.
  std::optional<int> edge_slot(TileId tile, EdgeId edge) const;

  std::size_t interior_edge_count() const noexcept;

 private:
  friend Patch build_patch(std::span<const Pgram> shapes);

  std::vector<Tile> tiles_;
  std::vector<Edge> edges_;
  std::vector<Vec2> vertices_;
  std::vector<Pgram> protoset_;
  double alpha_ = 0.0;
};

/// Builds a patch from raw parallelograms. Tile ids follow input order.
///
/// Vertices closer than eps are merged, congruent shapes share a prototile,
/// and edges are matched on merged vertex pairs. The result is not required
/// to be vertex-to-vertex; see validate().
///
/// Throws PatchError for an empty input, a degenerate tile, or overlapping
/// interiors ("packing violated").
Patch build_patch(std::span<const Pgram> shapes);

/// Lists every violation of the vertex-to-vertex packing assumption:
/// degenerate tiles, interior overlaps, and vertices that lie on an edge or
/// in the interior of a tile without being one of its vertices.
ValidationReport validate(const Patch& patch);

/// The other tile across `edge`, or nullopt on the patch boundary.
/// Throws PatchError if `edge` is not an edge of `tile`.
std::optional<TileId> adjacent_through_edge(const Patch& patch, TileId tile, EdgeId edge);

/// The edge of `tile` parallel and opposite to `edge`.
/// Throws PatchError if `edge` is not an edge of `tile`.
EdgeId opposite_edge(const Patch& patch, TileId tile, EdgeId edge);

/// Tiles sharing an edge with `tile`, ascending.
std::vector<TileId> edge_neighbors(const Patch& patch, TileId tile);

}  // namespace wormkit
