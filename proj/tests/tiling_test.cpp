#include "wormkit/tiling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "wormkit/generators.hpp"

namespace wormkit {
namespace {

using testing::grid_tile;

TEST(BuildPatchTest, ThreeByThreeGrid) {
  const Patch p = gen_square_grid(3, 3);
  EXPECT_EQ(p.tile_count(), 9u);
  EXPECT_EQ(p.edges().size(), 24u);
  EXPECT_EQ(p.interior_edge_count(), 12u);
  EXPECT_EQ(p.vertices().size(), 16u);
  ASSERT_EQ(p.protoset().size(), 1u);
  EXPECT_DOUBLE_EQ(p.alpha(), std::numbers::pi / 2);
  EXPECT_TRUE(validate(p).passed());
}

TEST(BuildPatchTest, EdgeCountMatchesEuler) {
  // Grid oracle: h(w+1) vertical + w(h+1) horizontal unit segments.
  for (int w = 1; w <= 6; ++w) {
    for (int h = 1; h <= 6; ++h) {
      const Patch p = gen_square_grid(w, h);
      EXPECT_EQ(p.edges().size(), static_cast<std::size_t>(h * (w + 1) + w * (h + 1)));
      EXPECT_EQ(p.interior_edge_count(), static_cast<std::size_t>(h * (w - 1) + w * (h - 1)));
    }
  }
}

TEST(BuildPatchTest, RejectsOverlapsAndEmptyInput) {
  const std::vector<Pgram> overlapping{Pgram({0, 0}, {1, 0}, {0, 1}), Pgram({0.5, 0}, {1, 0}, {0, 1})};
  try {
    build_patch(overlapping);
    FAIL() << "expected PatchError";
  } catch (const PatchError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("packing violated", 0), 0u) << e.what();
  }
  EXPECT_THROW(build_patch(std::vector<Pgram>{}), PatchError);
  const std::vector<Pgram> degenerate{Pgram::unchecked({0, 0}, {1, 0}, {2, 0})};
  EXPECT_THROW(build_patch(degenerate), PatchError);
}

TEST(BuildPatchTest, TouchingAtACornerIsAllowed) {
  const std::vector<Pgram> shapes{Pgram({0, 0}, {1, 0}, {0, 1}), Pgram({1, 1}, {1, 0}, {0, 1})};
  const Patch p = build_patch(shapes);
  EXPECT_EQ(p.vertices().size(), 7u);
  EXPECT_EQ(p.interior_edge_count(), 0u);
  EXPECT_TRUE(validate(p).passed());
}

TEST(BuildPatchTest, SnapsNearlyCoincidentVertices) {
  const std::vector<Pgram> shapes{Pgram({0, 0}, {1, 0}, {0, 1}),
                                  Pgram({1 + 1e-12, -1e-12}, {1, 0}, {0, 1})};
  const Patch p = build_patch(shapes);
  EXPECT_EQ(p.vertices().size(), 6u);
  EXPECT_EQ(p.interior_edge_count(), 1u);
}

TEST(ValidateTest, BrickWallIsNotVertexToVertex) {
  std::vector<Pgram> bricks;
  for (int c = 0; c < 3; ++c) bricks.emplace_back(Vec2(c, 0), Vec2(1, 0), Vec2(0, 1));
  for (int c = 0; c < 2; ++c) bricks.emplace_back(Vec2(c + 0.5, 1), Vec2(1, 0), Vec2(0, 1));
  const Patch p = build_patch(bricks);
  const ValidationReport r = validate(p);
  EXPECT_FALSE(r.passed());
  for (const auto& v : r.violations) EXPECT_EQ(v.kind, "vertex-to-vertex") << v.detail;
  // Corners (0.5,1), (1.5,1), (2.5,1) of the top row sit on bottom-row edges,
  // and (1,1), (2,1) of the bottom row sit on top-row edges.
  EXPECT_EQ(r.violations.size(), 5u);
}

TEST(AdjacencyTest, GridNeighbours) {
  const Patch p = gen_square_grid(3, 3);
  const TileId center = grid_tile(3, 1, 1);
  const Tile& t = p.tile(center);
  // Edges 0..3: bottom, right, top, left.
  EXPECT_EQ(adjacent_through_edge(p, center, t.edges[0]), grid_tile(3, 0, 1));
  EXPECT_EQ(adjacent_through_edge(p, center, t.edges[1]), grid_tile(3, 1, 2));
  EXPECT_EQ(adjacent_through_edge(p, center, t.edges[2]), grid_tile(3, 2, 1));
  EXPECT_EQ(adjacent_through_edge(p, center, t.edges[3]), grid_tile(3, 1, 0));
  const TileId corner = grid_tile(3, 0, 0);
  EXPECT_FALSE(adjacent_through_edge(p, corner, p.tile(corner).edges[0]));
  EXPECT_THROW(adjacent_through_edge(p, corner, t.edges[1]), PatchError);

  const std::vector<TileId> expected{grid_tile(3, 0, 1), grid_tile(3, 1, 0), grid_tile(3, 1, 2),
                                     grid_tile(3, 2, 1)};
  EXPECT_EQ(edge_neighbors(p, center), expected);
}

TEST(AdjacencyTest, OppositeEdgeIsParallelAndDisjoint) {
  const Patch p = gen_sheared_grid(4, 4, 0.5);
  for (const Tile& t : p.tiles()) {
    for (int k = 0; k < 4; ++k) {
      const EdgeId e = t.edges[k];
      const EdgeId o = opposite_edge(p, t.id, e);
      EXPECT_EQ(o, t.edges[(k + 2) % 4]);
      const auto [a1, a2] = p.edge_endpoints(e);
      const auto [b1, b2] = p.edge_endpoints(o);
      EXPECT_NEAR(cross(a2 - a1, b2 - b1), 0.0, 1e-12);
      EXPECT_GT(std::min({distance(a1, b1), distance(a1, b2), distance(a2, b1), distance(a2, b2)}), 0.5);
    }
  }
}

TEST(AdjacencyTest, EdgeIncidenceIsSymmetric) {
  const Patch p = gen_multigrid(testing::penrose_spec(4.0)).patch;
  for (const Edge& e : p.edges()) {
    ASSERT_GE(e.tile_count, 1);
    for (int i = 0; i < e.tile_count; ++i) {
      ASSERT_TRUE(p.edge_slot(e.tiles[i], e.id));
    }
    if (e.tile_count == 2) {
      EXPECT_EQ(adjacent_through_edge(p, e.tiles[0], e.id), e.tiles[1]);
      EXPECT_EQ(adjacent_through_edge(p, e.tiles[1], e.id), e.tiles[0]);
    }
  }
}

}  // namespace
}  // namespace wormkit
