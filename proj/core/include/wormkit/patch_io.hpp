#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wormkit/tiling.hpp"

namespace wormkit {

/// Raised for unreadable or malformed patch files.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Plain-text patch file:
///
///   wormkit-patch 1
///   generator <free text>          (optional)
///   tiles <count>
///   <ax> <ay> <ux> <uy> <vx> <vy>  (one line per tile, %.17g)
///
/// Lines starting with '#' are comments. Tile ids follow line order.
struct PatchFile {
  int version = 1;
  std::string generator;
  std::vector<Pgram> tiles;
};

inline constexpr int kPatchFormatVersion = 1;

void write_patch_file(std::ostream& os, const Patch& patch, const std::string& generator = {});
std::string format_patch_file(const Patch& patch, const std::string& generator = {});

PatchFile parse_patch_file(std::istream& is);

/// Reads and builds a patch. Throws FormatError for I/O or syntax problems;
/// build errors (degenerate or overlapping tiles) propagate as PatchError.
PatchFile read_patch_file(const std::filesystem::path& path);
Patch load_patch(const std::filesystem::path& path);

void save_patch(const std::filesystem::path& path, const Patch& patch,
                const std::string& generator = {});

}  // namespace wormkit
