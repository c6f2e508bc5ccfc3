#include "wormkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wormkit {

Patch gen_square_grid(int w, int h) { return gen_sheared_grid(w, h, 0.0); }

Patch gen_sheared_grid(int w, int h, double shear) {
  if (w < 1 || h < 1) throw Error("grid dimensions must be at least 1");
  std::vector<Pgram> shapes;
  shapes.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  const Vec2 u{1.0, 0.0};
  const Vec2 v{shear, 1.0};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      shapes.emplace_back(Vec2{c + r * shear, static_cast<double>(r)}, u, v);
    }
  }
  return build_patch(shapes);
}

std::vector<Vec2> multigrid_directions(int n) {
  if (n < 2) throw Error("multigrid needs at least 2 families");
  const double step = (n % 2 == 1 ? 2.0 : 1.0) * std::numbers::pi / n;
  std::vector<Vec2> dirs;
  for (int j = 0; j < n; ++j) dirs.emplace_back(std::cos(step * j), std::sin(step * j));
  return dirs;
}

std::string describe(const MultigridSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "multigrid n=" << spec.n << " offsets=";
  for (std::size_t i = 0; i < spec.offsets.size(); ++i) os << (i ? "," : "") << spec.offsets[i];
  os << " radius=" << spec.radius;
  if (spec.grid_range > 0) os << " grid_range=" << spec.grid_range;
  return os.str();
}

MultigridPatch gen_multigrid(const MultigridSpec& spec) {
  if (spec.n < 2) throw Error("multigrid needs at least 2 families");
  if (static_cast<int>(spec.offsets.size()) != spec.n) {
    throw Error("multigrid needs one offset per family");
  }
  if (!(spec.radius > 0) || !std::isfinite(spec.radius)) throw Error("radius must be positive");
  for (double g : spec.offsets) {
    if (!std::isfinite(g)) throw Error("offsets must be finite");
  }

  const auto dirs = multigrid_directions(spec.n);
  const double eps = tolerance().eps;
  double max_offset = 0;
  for (double g : spec.offsets) max_offset = std::max(max_offset, std::abs(g));
  const int range = spec.grid_range > 0
                        ? spec.grid_range
                        : static_cast<int>(std::ceil(spec.radius + max_offset)) + 1;

  MultigridPatch out;
  out.directions = dirs;
  std::vector<Pgram> shapes;

  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const Vec2& ni = dirs[i];
      const Vec2& nj = dirs[j];
      const double det = cross(ni, nj);
      for (int p = -range; p <= range; ++p) {
        for (int q = -range; q <= range; ++q) {
          // Solve <x, ni> = gi + p, <x, nj> = gj + q.
          const double a = spec.offsets[i] + p;
          const double b = spec.offsets[j] + q;
          const Vec2 x{(a * nj.y() - b * ni.y()) / det, (b * ni.x() - a * nj.x()) / det};
          if (norm(x) > spec.radius) continue;

          Vec2 anchor = ni * static_cast<double>(p) + nj * static_cast<double>(q);
          for (int r = 0; r < spec.n; ++r) {
            if (r == i || r == j) continue;
            const double s = dot(x, dirs[r]) - spec.offsets[r];
            if (std::abs(s - std::round(s)) <= eps) throw Error("degenerate multigrid");
            anchor += dirs[r] * std::ceil(s);
          }
          shapes.emplace_back(anchor, ni, nj);
          out.duals.push_back({GridLine{i, p}, GridLine{j, q}});
        }
      }
    }
  }
  if (shapes.empty()) throw Error("multigrid radius contains no intersections");

  out.patch = build_patch(shapes);
  const auto report = validate(out.patch);
  if (!report.passed()) {
    throw Error("internal error: multigrid patch failed validation (" +
                std::to_string(report.violations.size()) + " violations)");
  }
  return out;
}

}  // namespace wormkit
