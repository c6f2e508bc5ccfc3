#pragma once

#include <optional>
#include <string>

#include "wormkit/tiling.hpp"
#include "wormkit/travel.hpp"
#include "wormkit/worms.hpp"

namespace wormkit {

struct RenderOptions {
  /// Overlay every worm as a polyline through its rung midpoints, one hue
  /// per family.
  bool worms = false;
  /// Highlight a travel route.
  std::optional<TravelRoute> route;
  /// Draw the two forbidden cones at a rung of this worm.
  std::optional<WormId> cone_worm;
  /// Rung index for the cones; defaults to the middle rung.
  std::optional<std::size_t> cone_rung;
  /// Print tile ids at tile centroids.
  bool labels = false;
  /// Output width in user units; height follows the aspect ratio.
  double width = 800.0;
};

/// Deterministic SVG 1.1 drawing of the patch. The viewBox is the patch
/// bounding box plus a 5% margin, with the y axis pointing up.
std::string render_svg(const Patch& patch, const WormIndex& worms, const RenderOptions& options);

}  // namespace wormkit
