#include "wormkit/patch_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wormkit/generators.hpp"

namespace wormkit {
namespace {

Patch reparse(const std::string& text) {
  std::istringstream in(text);
  return build_patch(parse_patch_file(in).tiles);
}

TEST(PatchIoTest, FormatIsAFixedPoint) {
  const Patch p = gen_multigrid(testing::penrose_spec(4.0)).patch;
  const std::string once = format_patch_file(p, "multigrid n=5");
  const std::string twice = format_patch_file(reparse(once), "multigrid n=5");
  EXPECT_EQ(once, twice);
}

TEST(PatchIoTest, ReadsBackBitIdenticalCoordinates) {
  const Patch p = gen_sheared_grid(3, 2, 1.0 / 3.0);
  std::istringstream in(format_patch_file(p, "sheared"));
  const PatchFile f = parse_patch_file(in);
  EXPECT_EQ(f.version, kPatchFormatVersion);
  EXPECT_EQ(f.generator, "sheared");
  ASSERT_EQ(f.tiles.size(), p.tile_count());
  for (std::size_t i = 0; i < f.tiles.size(); ++i) {
    EXPECT_EQ(f.tiles[i].anchor(), p.tiles()[i].shape.anchor());
    EXPECT_EQ(f.tiles[i].u(), p.tiles()[i].shape.u());
    EXPECT_EQ(f.tiles[i].v(), p.tiles()[i].shape.v());
  }
}

TEST(PatchIoTest, AcceptsCommentsAndMissingGenerator) {
  const std::string text =
      "# hand written\nwormkit-patch 1\ntiles 2\n0 0 1 0 0 1\n# between\n1 0 1 0 0 1\n";
  std::istringstream in(text);
  const PatchFile f = parse_patch_file(in);
  EXPECT_TRUE(f.generator.empty());
  EXPECT_EQ(f.tiles.size(), 2u);
}

TEST(PatchIoTest, RejectsMalformedFiles) {
  for (const char* bad : {"", "wormkit-patch 2\ntiles 0\n", "not-a-patch 1\n",
                          "wormkit-patch 1\ntiles 2\n0 0 1 0 0 1\n",
                          "wormkit-patch 1\ntiles 1\n0 0 1 0 0\n",
                          "wormkit-patch 1\ntiles 1\n0 0 1 0 0 1 7\n",
                          "wormkit-patch 1\ntiles 1\n0 0 1 x 0 1\n",
                          "wormkit-patch 1\ntiles 1\n0 0 1 nan 0 1\n",
                          "wormkit-patch 1\ntiles -1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_patch_file(in), FormatError) << bad;
  }
}

TEST(PatchIoTest, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "wormkit_patch_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "grid.patch";
  const Patch p = gen_square_grid(4, 4);
  save_patch(path, p, "grid 4x4");
  const Patch q = load_patch(path);
  EXPECT_EQ(q.tile_count(), 16u);
  EXPECT_EQ(format_patch_file(q, "grid 4x4"), format_patch_file(p, "grid 4x4"));
  EXPECT_THROW(load_patch(dir / "missing.patch"), FormatError);

  std::ofstream(dir / "overlap.patch") << "wormkit-patch 1\ntiles 2\n0 0 1 0 0 1\n0.5 0 1 0 0 1\n";
  EXPECT_THROW(load_patch(dir / "overlap.patch"), PatchError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace wormkit
