#include "wormkit/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace wormkit {

namespace {

constexpr std::array<const char*, 8> kTileFills = {
    "#f4d58d", "#8fb8de", "#c5e1a5", "#f2a7a0", "#d1c4e9", "#b2dfdb", "#ffe0b2", "#cfd8dc"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// Math coordinates to SVG user space (y down).
std::string pt(const Vec2& p) { return num(p.x()) + "," + num(-p.y()); }

std::string family_color(std::size_t family, std::size_t families) {
  const double hue = 360.0 * static_cast<double>(family) / static_cast<double>(std::max<std::size_t>(families, 1));
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,40%%)", hue);
  return buf;
}

Vec2 rung_mid(const Patch& patch, EdgeId e) {
  const auto [a, b] = patch.edge_endpoints(e);
  return (a + b) * 0.5;
}

void polyline(std::ostringstream& os, const std::vector<Vec2>& pts, const std::string& stroke,
              double width, const std::string& extra = {}) {
  os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
     << "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"" << extra << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pt(pts[i]);
  os << "\"/>\n";
}

std::vector<Vec2> worm_path(const Patch& patch, const Worm& w) {
  std::vector<Vec2> pts;
  for (EdgeId e : w.rungs) pts.push_back(rung_mid(patch, e));
  return pts;
}

}  // namespace

std::string render_svg(const Patch& patch, const WormIndex& worms, const RenderOptions& options) {
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  for (const Vec2& v : patch.vertices()) {
    min_x = std::min(min_x, v.x());
    min_y = std::min(min_y, v.y());
    max_x = std::max(max_x, v.x());
    max_y = std::max(max_y, v.y());
  }
  const double w = max_x - min_x, h = max_y - min_y;
  const double margin = 0.05 * std::max(w, h);
  const double vb_x = min_x - margin, vb_y = -(max_y + margin);
  const double vb_w = w + 2 * margin, vb_h = h + 2 * margin;
  const double diag = std::hypot(w, h);
  const double stroke = std::max(diag, 1.0) / 600.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width)
     << "\" height=\"" << num(options.width * vb_h / vb_w) << "\" viewBox=\"" << num(vb_x) << ' '
     << num(vb_y) << ' ' << num(vb_w) << ' ' << num(vb_h) << "\">\n";

  os << "<g id=\"tiles\" stroke=\"#333333\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const Tile& t : patch.tiles()) {
    os << "<polygon fill=\"" << kTileFills[static_cast<std::size_t>(t.prototile_id) % kTileFills.size()]
       << "\" points=\"";
    for (int k = 0; k < 4; ++k) os << (k ? " " : "") << pt(patch.vertex(t.vertices[k]));
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (options.worms) {
    os << "<g id=\"worms\" opacity=\"0.8\">\n";
    for (const Worm& worm : worms.worms) {
      polyline(os, worm_path(patch, worm), family_color(to_index(worm.family), worms.families.size()),
               stroke * 2.5);
    }
    os << "</g>\n";
  }

  if (options.cone_worm) {
    const Worm& worm = worms.worm(*options.cone_worm);
    const std::size_t r = std::min(options.cone_rung.value_or(worm.rungs.size() / 2), worm.rungs.size() - 1);
    const auto [e1, e2] = patch.edge_endpoints(worm.rungs[r]);
    const double alpha = patch.alpha();
    const double reach = 0.25 * std::max(diag, 1.0);
    os << "<g id=\"cones\" fill=\"#d32f2f\" fill-opacity=\"0.25\" stroke=\"#d32f2f\" stroke-width=\""
       << num(stroke) << "\">\n";
    for (const auto& [apex, axis] : {std::pair{e1, e1 - e2}, std::pair{e2, e2 - e1}}) {
      const Vec2 unit = axis / norm(axis);
      os << "<polygon points=\"" << pt(apex);
      constexpr int kArc = 24;
      for (int i = 0; i <= kArc; ++i) {
        const double a = -alpha + 2 * alpha * i / kArc;
        os << ' ' << pt(apex + rotated(unit, a) * reach);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
    os << "<g id=\"cone-worm\">\n";
    polyline(os, worm_path(patch, worm), "#d32f2f", stroke * 3);
    os << "</g>\n";
  }

  if (options.route) {
    const TravelRoute& route = *options.route;
    os << "<g id=\"route\">\n";
    for (WormId id : route.worms) {
      polyline(os, worm_path(patch, worms.worm(id)), "#222222", stroke * 3, " stroke-opacity=\"0.35\"");
    }
    std::vector<Vec2> pts;
    for (TileId t : route_tiles(worms, route)) pts.push_back(patch.tile(t).shape.centroid());
    polyline(os, pts, "#000000", stroke * 4);
    for (TileId t : route.turns) {
      const Vec2 c = patch.tile(t).shape.centroid();
      os << "<circle cx=\"" << num(c.x()) << "\" cy=\"" << num(-c.y()) << "\" r=\"" << num(stroke * 6)
         << "\" fill=\"#000000\"/>\n";
    }
    os << "</g>\n";
  }

  if (options.labels) {
    os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(0.25)
       << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#000000\">\n";
    for (const Tile& t : patch.tiles()) {
      const Vec2 c = t.shape.centroid();
      os << "<text x=\"" << num(c.x()) << "\" y=\"" << num(-c.y()) << "\">" << to_int(t.id) << "</text>\n";
    }
    os << "</g>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace wormkit
