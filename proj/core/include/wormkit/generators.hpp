#pragma once

#include <string>
#include <vector>

#include "wormkit/tiling.hpp"

namespace wormkit {

/// n families of unit-spaced parallel lines; the dual of their arrangement
/// is a rhombic tiling.
struct MultigridSpec {
  int n = 5;
  std::vector<double> offsets;  // one per family
  double radius = 8.0;          // keep intersections within this disk
  /// Line indices -grid_range..grid_range per family; 0 picks a range that
  /// covers the disk.
  int grid_range = 0;
};

/// Line `index` of family `family`: { x : <x, n_family> = offset + index }.
struct GridLine {
  int family = 0;
  int index = 0;
  bool operator==(const GridLine&) const = default;
  auto operator<=>(const GridLine&) const = default;
};

struct MultigridPatch {
  Patch patch;
  /// The two grid lines whose intersection each tile is dual to, by tile id.
  std::vector<std::array<GridLine, 2>> duals;
  /// Unit normals of the families.
  std::vector<Vec2> directions;
};

/// w x h unit squares; tile (row r, column c) has id r * w + c and anchor
/// (c, r).
Patch gen_square_grid(int w, int h);

/// w x h copies of the parallelogram u = (1, 0), v = (shear, 1); tile
/// (row r, column c) has id r * w + c and anchor (c + r * shear, r).
Patch gen_sheared_grid(int w, int h, double shear);

/// Family directions: angle 2*pi*j/n for odd n, pi*j/n for even n.
std::vector<Vec2> multigrid_directions(int n);

/// De Bruijn dualization of a multigrid. Each intersection of line (i, p)
/// with line (j, q), i < j, within `radius` of the origin becomes the rhomb
/// with edges n_i, n_j anchored at sum_r K_r n_r, where K_r counts the lines
/// of family r below the intersection (K_i = p, K_j = q).
///
/// Throws Error("degenerate multigrid") when three lines meet within eps,
/// and Error for invalid parameters.
MultigridPatch gen_multigrid(const MultigridSpec& spec);

/// Human-readable one-line description used as file provenance.
std::string describe(const MultigridSpec& spec);

}  // namespace wormkit
