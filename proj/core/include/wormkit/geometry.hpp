#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wormkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

/// Absolute tolerances shared by every predicate in the library.
///
/// `eps` governs vertex matching and length comparisons (coordinates are
/// assumed to be O(1)..O(10^3)); `angle_eps` governs angle comparisons in
/// radians.
struct Tolerance {
  double eps = 1e-9;
  double angle_eps = 1e-9;
};

const Tolerance& tolerance() noexcept;

/// Replaces the process-wide tolerance. Not synchronized: call it before any
/// concurrent work starts.
void set_tolerance(const Tolerance& tol);

/// Reads WORMKIT_EPS from the environment and, when set to a positive number,
/// uses it for `eps`. Returns true if the variable was applied.
bool apply_tolerance_from_env();

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

class Vec2 {
 public:
  constexpr Vec2() = default;
  Vec2(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw GeometryError("non-finite coordinate");
    }
  }

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  Vec2 operator+(const Vec2& o) const { return {x_ + o.x_, y_ + o.y_}; }
  Vec2 operator-(const Vec2& o) const { return {x_ - o.x_, y_ - o.y_}; }
  Vec2 operator-() const { return {-x_, -y_}; }
  Vec2 operator*(double s) const { return {x_ * s, y_ * s}; }
  Vec2 operator/(double s) const { return {x_ / s, y_ / s}; }
  Vec2& operator+=(const Vec2& o) { return *this = *this + o; }
  Vec2& operator-=(const Vec2& o) { return *this = *this - o; }

  bool operator==(const Vec2&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) noexcept {
  return a.x() * b.x() + a.y() * b.y();
}
inline double cross(const Vec2& a, const Vec2& b) noexcept {
  return a.x() * b.y() - a.y() * b.x();
}
inline double norm(const Vec2& a) noexcept { return std::hypot(a.x(), a.y()); }
inline double distance(const Vec2& a, const Vec2& b) noexcept {
  return norm(a - b);
}

/// Counter-clockwise rotation by `radians`.
Vec2 rotated(const Vec2& v, double radians);

/// True if |a - b| <= eps componentwise-euclidean.
bool near(const Vec2& a, const Vec2& b, double eps);

/// Unsigned angle between two vectors in [0, pi].
/// Throws GeometryError("degenerate vector") if either has norm <= eps.
double angle_between(const Vec2& x, const Vec2& z);

/// Direction angle of `v` reduced to [0, pi): the orientation of the line
/// spanned by v, ignoring sign.
double line_angle(const Vec2& v);

/// Unit vector with the same line as `v` and line_angle in [0, pi).
Vec2 sign_normalized_direction(const Vec2& v);

/// Smallest difference between two line angles, accounting for the wrap at pi.
double line_angle_distance(double a, double b) noexcept;

/// Reduces an angle to [0, 2pi), snapping values within angle_eps of 2pi to 0.
double normalize_angle(double radians) noexcept;

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// Open cone { apex + z : angle(axis, z) < half_angle }.
class Cone {
 public:
  Cone(Vec2 apex, Vec2 axis, double half_angle);

  const Vec2& apex() const noexcept { return apex_; }
  const Vec2& axis() const noexcept { return axis_; }
  double half_angle() const noexcept { return half_angle_; }

  /// Strict membership: the boundary rays and the apex are outside.
  bool contains(const Vec2& p) const;

 private:
  Vec2 apex_;
  Vec2 axis_;
  double half_angle_;
};

bool cone_contains(const Cone& c, const Vec2& p);

// ---------------------------------------------------------------------------
// Isometries
// ---------------------------------------------------------------------------

/// p -> R(rotation) * F^reflected * p + translation, where F mirrors across
/// the x-axis.
struct Isometry {
  double rotation = 0.0;  // radians, [0, 2pi)
  bool reflected = false;
  Vec2 translation;

  Vec2 apply(const Vec2& p) const;
  /// Linear part only (no translation).
  Vec2 apply_linear(const Vec2& v) const;
};

/// Composition (a ∘ b)(p) = a(b(p)).
Isometry compose(const Isometry& a, const Isometry& b);

// ---------------------------------------------------------------------------
// Parallelograms
// ---------------------------------------------------------------------------

/// Parallelogram with vertices anchor, anchor+u, anchor+u+v, anchor+v.
class Pgram {
 public:
  /// Throws GeometryError if the area is not above eps.
  Pgram(Vec2 anchor, Vec2 u, Vec2 v);

  /// Builds without the area check; used by validators that must be able to
  /// represent degenerate input.
  static Pgram unchecked(Vec2 anchor, Vec2 u, Vec2 v);

  const Vec2& anchor() const noexcept { return anchor_; }
  const Vec2& u() const noexcept { return u_; }
  const Vec2& v() const noexcept { return v_; }

  std::array<Vec2, 4> vertices() const;
  Vec2 centroid() const;
  double area() const noexcept { return std::abs(cross(u_, v_)); }
  /// The acute-or-right interior angle, in (0, pi/2].
  double min_interior_angle() const;

  Pgram transformed(const Isometry& g) const;

 private:
  Pgram() = default;
  Vec2 anchor_;
  Vec2 u_;
  Vec2 v_;
};

/// Every isometry mapping `a` onto `b` as point sets (at most 8), in a fixed
/// enumeration order.
std::vector<Isometry> congruences(const Pgram& a, const Pgram& b);

/// One isometry mapping `a` onto `b`, or nullopt if they are not congruent.
std::optional<Isometry> congruent(const Pgram& a, const Pgram& b);

/// The linear parts of the symmetry group of `p` (2, 4 or 8 elements).
std::vector<Isometry> symmetry_group(const Pgram& p);

/// True if the two vertex sets agree within eps (order-independent).
bool same_vertex_set(const Pgram& a, const Pgram& b, double eps);

}  // namespace wormkit
