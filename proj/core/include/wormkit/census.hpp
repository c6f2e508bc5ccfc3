#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wormkit/report.hpp"
#include "wormkit/tiling.hpp"
#include "wormkit/worms.hpp"

namespace wormkit {

using BigInt = boost::multiprecision::cpp_int;

/// Tiles of one prototile that are translates of each other.
struct OrientationClass {
  int prototile_id = 0;
  /// Canonical placement: among the placements equivalent under the
  /// prototile's symmetries, the unreflected one (if any) with the smallest
  /// rotation in [0, 2pi).
  double rotation = 0.0;
  bool reflected = false;
  std::int64_t count = 0;
  /// Lowest tile id in the class.
  TileId representative{};
};

struct CensusReport {
  std::vector<OrientationClass> classes;  // by prototile, then rotation
  int m = 0;                              // protoset size
  double alpha = 0.0;
  int k = 0;                              // turn_budget(alpha)
  BigInt bound_n;
  /// Number of orientation classes of each prototile.
  std::vector<std::int64_t> per_prototile_counts;
  /// Number of tiles of each prototile.
  std::vector<std::int64_t> per_prototile_tiles;
};

/// Canonical (rotation, reflected) of a placement modulo the symmetry group
/// of the prototile it places.
Isometry canonical_orientation(const Isometry& placement, const std::vector<Isometry>& symmetries);

/// Groups tiles into orientation classes and evaluates the bound N.
CensusReport orientation_census(const Patch& patch);

/// ((2m)^(k+1) + 2m - 2) / (2m - 1). Throws Error if m < 1 or k < 0.
BigInt orientation_bound(std::int64_t m, std::int64_t k);

/// Every prototile appears in at most N orientation classes.
CheckReport check_orientation_theorem(const Patch& patch);
CheckReport check_orientation_theorem(const Patch& patch, const CensusReport& census);

/// Along every worm, any two tiles of the same prototile are translates or
/// mirror images of each other.
CheckReport check_worm_step_orientation(const Patch& patch, const WormIndex& worms);

}  // namespace wormkit
