#include "wormkit/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <unordered_map>

namespace wormkit {

namespace {

struct CellKey {
  std::int64_t x;
  std::int64_t y;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(k.x);
    const auto h2 = std::hash<std::int64_t>{}(k.y);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

/// Merges points closer than eps into one vertex id.
class VertexSnapper {
 public:
  explicit VertexSnapper(double eps) : eps_(eps) {}

  VertexId insert(const Vec2& p) {
    const CellKey c = cell(p);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find({c.x + dx, c.y + dy});
        if (it == cells_.end()) continue;
        for (VertexId id : it->second) {
          if (near(points_[to_index(id)], p, eps_)) return id;
        }
      }
    }
    const auto id = id_from_index<VertexId>(points_.size());
    points_.push_back(p);
    cells_[c].push_back(id);
    return id;
  }

  std::vector<Vec2> take_points() { return std::move(points_); }

 private:
  CellKey cell(const Vec2& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x() / eps_)),
            static_cast<std::int64_t>(std::floor(p.y() / eps_))};
  }

  double eps_;
  std::vector<Vec2> points_;
  std::unordered_map<CellKey, std::vector<VertexId>, CellKeyHash> cells_;
};

struct Box {
  double min_x, min_y, max_x, max_y;
};

Box bounding_box(const Pgram& p) {
  Box b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
        std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Vec2& v : p.vertices()) {
    b.min_x = std::min(b.min_x, v.x());
    b.min_y = std::min(b.min_y, v.y());
    b.max_x = std::max(b.max_x, v.x());
    b.max_y = std::max(b.max_y, v.y());
  }
  return b;
}

/// Uniform bucket grid over tile bounding boxes.
class TileGrid {
 public:
  explicit TileGrid(const std::vector<Pgram>& shapes) {
    std::vector<double> sizes;
    sizes.reserve(shapes.size());
    for (const auto& s : shapes) {
      const Box b = bounding_box(s);
      sizes.push_back(std::max(b.max_x - b.min_x, b.max_y - b.min_y));
    }
    std::nth_element(sizes.begin(), sizes.begin() + sizes.size() / 2, sizes.end());
    cell_ = std::max(sizes[sizes.size() / 2], 1e-6);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const Box b = bounding_box(shapes[i]);
      const double pad = tolerance().eps;
      for (auto x = coord(b.min_x - pad); x <= coord(b.max_x + pad); ++x) {
        for (auto y = coord(b.min_y - pad); y <= coord(b.max_y + pad); ++y) {
          cells_[{x, y}].push_back(i);
        }
      }
    }
  }

  /// Indices of tiles whose padded bounding box may contain `p`.
  const std::vector<std::size_t>& at(const Vec2& p) const {
    static const std::vector<std::size_t> kEmpty;
    auto it = cells_.find({coord(p.x()), coord(p.y())});
    return it == cells_.end() ? kEmpty : it->second;
  }

  /// Indices of tiles sharing a cell with `box`, ascending, deduplicated.
  std::vector<std::size_t> overlapping(const Box& b) const {
    std::vector<std::size_t> out;
    for (auto x = coord(b.min_x); x <= coord(b.max_x); ++x) {
      for (auto y = coord(b.min_y); y <= coord(b.max_y); ++y) {
        auto it = cells_.find({x, y});
        if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::int64_t coord(double v) const {
    return static_cast<std::int64_t>(std::floor(v / cell_));
  }

  double cell_ = 1.0;
  std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> cells_;
};

/// Counter-clockwise vertex order.
std::array<Vec2, 4> ccw_vertices(const Pgram& p) {
  auto v = p.vertices();
  if (cross(p.u(), p.v()) < 0) std::swap(v[1], v[3]);
  return v;
}

/// Separating-axis test on two convex quadrilaterals. Touching along an
/// edge or at a vertex (within eps) does not count as overlap.
bool interiors_overlap(const Pgram& a, const Pgram& b, double eps) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  for (const Vec2& axis_edge : {a.u(), a.v(), b.u(), b.v()}) {
    const Vec2 n{-axis_edge.y(), axis_edge.x()};
    const double len = norm(n);
    double amin = std::numeric_limits<double>::max(), amax = std::numeric_limits<double>::lowest();
    double bmin = amin, bmax = amax;
    for (const Vec2& p : va) {
      const double d = dot(p, n) / len;
      amin = std::min(amin, d);
      amax = std::max(amax, d);
    }
    for (const Vec2& p : vb) {
      const double d = dot(p, n) / len;
      bmin = std::min(bmin, d);
      bmax = std::max(bmax, d);
    }
    if (amax <= bmin + eps || bmax <= amin + eps) return false;
  }
  return true;
}

enum class PointLocation { kOutside, kOnBoundary, kInterior };

PointLocation locate(const Pgram& p, const Vec2& q, double eps) {
  const auto v = ccw_vertices(p);
  bool on_boundary = false;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2 e = v[(i + 1) % 4] - v[i];
    const double d = cross(e, q - v[i]) / norm(e);
    if (d < -eps) return PointLocation::kOutside;
    if (d <= eps) on_boundary = true;
  }
  return on_boundary ? PointLocation::kOnBoundary : PointLocation::kInterior;
}

Vec2 overlap_witness(const Pgram& a, const Pgram& b) {
  return (a.centroid() + b.centroid()) * 0.5;
}

std::vector<Pgram> shapes_of(const std::vector<Tile>& tiles) {
  std::vector<Pgram> out;
  out.reserve(tiles.size());
  for (const auto& t : tiles) out.push_back(t.shape);
  return out;
}

void collect_overlaps(const std::vector<Pgram>& shapes, const TileGrid& grid,
                      std::vector<std::pair<std::size_t, std::size_t>>& out,
                      bool stop_at_first) {
  const double eps = tolerance().eps;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t j : grid.overlapping(bounding_box(shapes[i]))) {
      if (j <= i) continue;
      if (interiors_overlap(shapes[i], shapes[j], eps)) {
        out.emplace_back(i, j);
        if (stop_at_first) return;
      }
    }
  }
}

}  // namespace

// --- Patch accessors -------------------------------------------------------

const Tile& Patch::tile(TileId id) const {
  if (to_int(id) < 0 || to_index(id) >= tiles_.size()) {
    throw PatchError("tile id out of range: " + std::to_string(to_int(id)));
  }
  return tiles_[to_index(id)];
}

const Edge& Patch::edge(EdgeId id) const {
  if (to_int(id) < 0 || to_index(id) >= edges_.size()) {
    throw PatchError("edge id out of range: " + std::to_string(to_int(id)));
  }
  return edges_[to_index(id)];
}

std::pair<Vec2, Vec2> Patch::edge_endpoints(EdgeId id) const {
  const Edge& e = edge(id);
  return {vertex(e.endpoints[0]), vertex(e.endpoints[1])};
}

std::optional<int> Patch::edge_slot(TileId tile_id, EdgeId edge_id) const {
  const Tile& t = tile(tile_id);
  for (int k = 0; k < 4; ++k) {
    if (t.edges[k] == edge_id) return k;
  }
  return std::nullopt;
}

std::size_t Patch::interior_edge_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.tile_count == 2; }));
}

// --- Construction ----------------------------------------------------------

Patch build_patch(std::span<const Pgram> shapes) {
  if (shapes.empty()) throw PatchError("empty tile list");
  const double eps = tolerance().eps;

  Patch patch;
  std::vector<Pgram> shape_list(shapes.begin(), shapes.end());
  for (std::size_t i = 0; i < shape_list.size(); ++i) {
    if (shape_list[i].area() <= eps) {
      throw PatchError("degenerate tile " + std::to_string(i));
    }
  }

  {
    const TileGrid grid(shape_list);
    std::vector<std::pair<std::size_t, std::size_t>> overlaps;
    collect_overlaps(shape_list, grid, overlaps, /*stop_at_first=*/true);
    if (!overlaps.empty()) {
      throw PatchError("packing violated: tiles " + std::to_string(overlaps[0].first) +
                       " and " + std::to_string(overlaps[0].second));
    }
  }

  VertexSnapper snapper(eps);
  std::unordered_map<std::uint64_t, EdgeId> edge_lookup;
  patch.tiles_.reserve(shape_list.size());

  for (std::size_t i = 0; i < shape_list.size(); ++i) {
    const Pgram& shape = shape_list[i];

    int proto = -1;
    Isometry placement;
    for (std::size_t p = 0; p < patch.protoset_.size(); ++p) {
      if (auto g = congruent(patch.protoset_[p], shape)) {
        proto = static_cast<int>(p);
        placement = *g;
        break;
      }
    }
    if (proto < 0) {
      proto = static_cast<int>(patch.protoset_.size());
      patch.protoset_.emplace_back(Vec2{}, shape.u(), shape.v());
      placement = *congruent(patch.protoset_.back(), shape);
    }

    Tile tile{id_from_index<TileId>(i), shape, proto, placement, {}, {}};
    const auto corners = shape.vertices();
    for (int k = 0; k < 4; ++k) tile.vertices[k] = snapper.insert(corners[k]);

    for (int k = 0; k < 4; ++k) {
      VertexId a = tile.vertices[k];
      VertexId b = tile.vertices[(k + 1) % 4];
      if (a == b) throw PatchError("tile " + std::to_string(i) + " has a collapsed edge");
      if (to_int(b) < to_int(a)) std::swap(a, b);
      const std::uint64_t key = (static_cast<std::uint64_t>(to_int(a)) << 32) |
                                static_cast<std::uint32_t>(to_int(b));
      auto [it, inserted] = edge_lookup.try_emplace(key, id_from_index<EdgeId>(patch.edges_.size()));
      if (inserted) {
        Edge e;
        e.id = it->second;
        e.endpoints = {a, b};
        e.tiles[0] = tile.id;
        e.tile_count = 1;
        patch.edges_.push_back(e);
      } else {
        Edge& e = patch.edges_[to_index(it->second)];
        if (e.tile_count >= 2) {
          throw PatchError("packing violated: more than two tiles on one edge");
        }
        e.tiles[1] = tile.id;
        e.tile_count = 2;
      }
      tile.edges[k] = it->second;
    }
    patch.tiles_.push_back(tile);
  }

  patch.vertices_ = snapper.take_points();
  patch.alpha_ = std::numbers::pi;
  for (const auto& p : patch.protoset_) {
    patch.alpha_ = std::min(patch.alpha_, p.min_interior_angle());
  }
  return patch;
}

// --- Validation ------------------------------------------------------------

ValidationReport validate(const Patch& patch) {
  ValidationReport report;
  report.name = "vertex";
  const double eps = tolerance().eps;
  const std::vector<Pgram> shapes = shapes_of(patch.tiles());

  for (const auto& t : patch.tiles()) {
    if (t.shape.area() <= eps) {
      report.violations.push_back(
          {"degenerate", {to_int(t.id)}, {}, t.shape.anchor(), "tile area below tolerance"});
    }
  }

  const TileGrid grid(shapes);
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  collect_overlaps(shapes, grid, overlaps, /*stop_at_first=*/false);
  for (const auto& [i, j] : overlaps) {
    report.violations.push_back({"overlap",
                                 {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)},
                                 {},
                                 overlap_witness(shapes[i], shapes[j]),
                                 "tile interiors intersect"});
  }

  // Which tiles each vertex belongs to, for the vertex-to-vertex test.
  std::vector<std::vector<std::size_t>> owners(patch.vertices().size());
  for (std::size_t i = 0; i < patch.tiles().size(); ++i) {
    for (VertexId v : patch.tiles()[i].vertices) owners[to_index(v)].push_back(i);
  }

  std::size_t v2v = 0;
  for (std::size_t vi = 0; vi < patch.vertices().size(); ++vi) {
    const Vec2& p = patch.vertices()[vi];
    for (std::size_t ti : grid.at(p)) {
      if (std::find(owners[vi].begin(), owners[vi].end(), ti) != owners[vi].end()) continue;
      const PointLocation loc = locate(shapes[ti], p, eps);
      if (loc == PointLocation::kOutside) continue;
      ++v2v;
      const std::int64_t owner = owners[vi].empty() ? -1 : static_cast<std::int64_t>(owners[vi][0]);
      report.violations.push_back(
          {"vertex-to-vertex",
           {static_cast<std::int64_t>(ti), owner},
           {},
           p,
           loc == PointLocation::kOnBoundary ? "vertex in relative interior of an edge"
                                             : "vertex in tile interior"});
    }
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.kind, a.tiles) < std::tie(b.kind, b.tiles);
            });
  report.add_stat("tiles", static_cast<std::int64_t>(patch.tile_count()));
  report.add_stat("vertices", static_cast<std::int64_t>(patch.vertices().size()));
  report.add_stat("edges", static_cast<std::int64_t>(patch.edges().size()));
  report.add_stat("interior_edges", static_cast<std::int64_t>(patch.interior_edge_count()));
  report.add_stat("overlaps", static_cast<std::int64_t>(overlaps.size()));
  report.add_stat("vertex_violations", static_cast<std::int64_t>(v2v));
  return report;
}

// --- Adjacency -------------------------------------------------------------

std::optional<TileId> adjacent_through_edge(const Patch& patch, TileId tile, EdgeId edge) {
  if (!patch.edge_slot(tile, edge)) {
    throw PatchError("edge " + std::to_string(to_int(edge)) + " is not an edge of tile " +
                     std::to_string(to_int(tile)));
  }
  const Edge& e = patch.edge(edge);
  if (e.tile_count < 2) return std::nullopt;
  return e.tiles[0] == tile ? e.tiles[1] : e.tiles[0];
}

EdgeId opposite_edge(const Patch& patch, TileId tile, EdgeId edge) {
  const auto slot = patch.edge_slot(tile, edge);
  if (!slot) {
    throw PatchError("edge " + std::to_string(to_int(edge)) + " is not an edge of tile " +
                     std::to_string(to_int(tile)));
  }
  return patch.tile(tile).edges[(*slot + 2) % 4];
}

std::vector<TileId> edge_neighbors(const Patch& patch, TileId tile) {
  std::vector<TileId> out;
  for (EdgeId e : patch.tile(tile).edges) {
    if (auto n = adjacent_through_edge(patch, tile, e)) out.push_back(*n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wormkit
