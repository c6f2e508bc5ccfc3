#include "wormkit/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace wormkit {

namespace {
Tolerance g_tolerance;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool same_sign(double a, double b) { return (a > 0) == (b > 0); }
}  // namespace

const Tolerance& tolerance() noexcept { return g_tolerance; }

void set_tolerance(const Tolerance& tol) {
  if (!(tol.eps > 0) || !(tol.angle_eps > 0)) {
    throw Error("tolerances must be positive");
  }
  g_tolerance = tol;
}

bool apply_tolerance_from_env() {
  const char* raw = std::getenv("WORMKIT_EPS");
  if (raw == nullptr || *raw == '\0') return false;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0) || !std::isfinite(value)) {
    throw Error(std::string("invalid WORMKIT_EPS: ") + raw);
  }
  Tolerance tol = g_tolerance;
  tol.eps = value;
  set_tolerance(tol);
  return true;
}

Vec2 rotated(const Vec2& v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

bool near(const Vec2& a, const Vec2& b, double eps) {
  return distance(a, b) <= eps;
}

double angle_between(const Vec2& x, const Vec2& z) {
  const double nx = norm(x);
  const double nz = norm(z);
  const double eps = tolerance().eps;
  if (nx <= eps || nz <= eps) throw GeometryError("degenerate vector");
  const double c = std::clamp(dot(x, z) / (nx * nz), -1.0, 1.0);
  return std::acos(c);
}

double line_angle(const Vec2& v) {
  if (norm(v) <= tolerance().eps) throw GeometryError("degenerate vector");
  double a = std::atan2(v.y(), v.x());
  if (a < 0) a += std::numbers::pi;
  if (a >= std::numbers::pi - tolerance().angle_eps) a = 0.0;
  return a;
}

Vec2 sign_normalized_direction(const Vec2& v) {
  const double a = line_angle(v);
  return {std::cos(a), std::sin(a)};
}

double line_angle_distance(double a, double b) noexcept {
  const double d = std::abs(a - b);
  return std::min(d, std::numbers::pi - d);
}

double normalize_angle(double radians) noexcept {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi - tolerance().angle_eps) a = 0.0;
  return a;
}

// --- Cone ------------------------------------------------------------------

Cone::Cone(Vec2 apex, Vec2 axis, double half_angle)
    : apex_(apex), axis_(axis), half_angle_(half_angle) {
  if (norm(axis) <= tolerance().eps) throw GeometryError("degenerate vector");
  if (!(half_angle >= 0.0) || half_angle >= std::numbers::pi) {
    throw GeometryError("cone half-angle must lie in [0, pi)");
  }
}

bool Cone::contains(const Vec2& p) const {
  const Vec2 d = p - apex_;
  if (norm(d) <= tolerance().eps) return false;
  return angle_between(axis_, d) < half_angle_ - tolerance().angle_eps;
}

bool cone_contains(const Cone& c, const Vec2& p) { return c.contains(p); }

// --- Isometry --------------------------------------------------------------

Vec2 Isometry::apply_linear(const Vec2& v) const {
  const Vec2 m = reflected ? Vec2{v.x(), -v.y()} : v;
  return rotated(m, rotation);
}

Vec2 Isometry::apply(const Vec2& p) const {
  return apply_linear(p) + translation;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  // R(a) F^ra R(b) F^rb = R(a ± b) F^(ra xor rb), since F R(t) = R(-t) F.
  Isometry out;
  out.rotation =
      normalize_angle(a.rotation + (a.reflected ? -b.rotation : b.rotation));
  out.reflected = a.reflected != b.reflected;
  out.translation = a.apply(b.translation);
  return out;
}

// --- Pgram -----------------------------------------------------------------

Pgram::Pgram(Vec2 anchor, Vec2 u, Vec2 v) : anchor_(anchor), u_(u), v_(v) {
  if (area() <= tolerance().eps) throw GeometryError("degenerate parallelogram");
}

Pgram Pgram::unchecked(Vec2 anchor, Vec2 u, Vec2 v) {
  Pgram p;
  p.anchor_ = anchor;
  p.u_ = u;
  p.v_ = v;
  return p;
}

std::array<Vec2, 4> Pgram::vertices() const {
  return {anchor_, anchor_ + u_, anchor_ + u_ + v_, anchor_ + v_};
}

Vec2 Pgram::centroid() const { return anchor_ + (u_ + v_) * 0.5; }

double Pgram::min_interior_angle() const {
  const double a = angle_between(u_, v_);
  return std::min(a, std::numbers::pi - a);
}

Pgram Pgram::transformed(const Isometry& g) const {
  return unchecked(g.apply(anchor_), g.apply_linear(u_), g.apply_linear(v_));
}

bool same_vertex_set(const Pgram& a, const Pgram& b, double eps) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::array<bool, 4> used{};
  for (const Vec2& p : va) {
    bool found = false;
    for (std::size_t j = 0; j < 4; ++j) {
      if (!used[j] && near(p, vb[j], eps)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Isometry> congruences(const Pgram& a, const Pgram& b) {
  const double eps = tolerance().eps;
  std::vector<Isometry> out;
  const auto vb = b.vertices();
  const Vec2& u = a.u();
  const Vec2& v = a.v();
  const double lu = norm(u);
  const double lv = norm(v);
  const double scale = std::max({1.0, lu, lv});

  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2 corner = vb[i];
    const Vec2 next = vb[(i + 1) % 4] - corner;
    const Vec2 prev = vb[(i + 3) % 4] - corner;
    for (int swap = 0; swap < 2; ++swap) {
      const Vec2& p = swap == 0 ? next : prev;
      const Vec2& q = swap == 0 ? prev : next;
      if (std::abs(norm(p) - lu) > eps || std::abs(norm(q) - lv) > eps) continue;
      if (std::abs(dot(u, v) - dot(p, q)) > eps * scale) continue;

      Isometry g;
      g.reflected = !same_sign(cross(u, v), cross(p, q));
      const Vec2 um = g.reflected ? Vec2{u.x(), -u.y()} : u;
      g.rotation = normalize_angle(std::atan2(cross(um, p), dot(um, p)));
      g.translation = corner - g.apply_linear(a.anchor());
      if (same_vertex_set(a.transformed(g), b, eps * scale)) out.push_back(g);
    }
  }
  return out;
}

std::optional<Isometry> congruent(const Pgram& a, const Pgram& b) {
  auto all = congruences(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Isometry> symmetry_group(const Pgram& p) {
  std::vector<Isometry> group = congruences(p, p);
  for (auto& g : group) g.translation = Vec2{};
  return group;
}

}  // namespace wormkit
