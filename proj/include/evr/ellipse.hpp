#pragma once

// Points on the ellipse E_a = {(x,y) : (x/a)^2 + y^2 = 1} are addressed by an
// angle on the unit circle through (cos t, sin t) -> (a cos t, sin t).
//
// Orientation: clockwise means decreasing angle. Every directed quantity in
// the library (step deltas, arcs, cyclic-graph indices) follows this.

#include <cmath>
#include <compare>
#include <numbers>
#include <sstream>

#include "evr/errors.hpp"

namespace evr {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;

/// Canonical representative of an angle in [0, 2pi).
inline double reduce_angle(double theta) {
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= two_pi) r = 0.0;
  return r;
}

class CirclePoint {
 public:
  constexpr CirclePoint() = default;
  explicit CirclePoint(double theta) : theta_(reduce_angle(theta)) {}

  double theta() const noexcept { return theta_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;

 private:
  double theta_ = 0.0;
};

/// Semi-major axis length a of E_a, restricted to the small-eccentricity
/// range [1, sqrt 2). a = 1 is the unit circle.
class Eccentricity {
 public:
  explicit Eccentricity(double a) : a_(a) {
    if (!(a >= 1.0 && a < sqrt2)) {
      std::ostringstream os;
      os.precision(17);
      os << "eccentricity a=" << a << " outside [1, sqrt(2))";
      fail(ErrorKind::InvalidParameter, os.str());
    }
  }

  double value() const noexcept { return a_; }
  bool is_circle() const noexcept { return a_ == 1.0; }

 private:
  double a_;
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

inline PlanePoint embed(CirclePoint p, Eccentricity a) {
  return {a.value() * std::cos(p.theta()), std::sin(p.theta())};
}

/// Clockwise angle travelled from p to q, in [0, 2pi).
inline double clockwise_delta(CirclePoint p, CirclePoint q) {
  return reduce_angle(p.theta() - q.theta());
}

/// True iff w lies on the closed clockwise arc from p to u.
inline bool in_clockwise_order(CirclePoint p, CirclePoint w, CirclePoint u) {
  return clockwise_delta(p, w) <= clockwise_delta(p, u);
}

/// Closed clockwise arc [start, end].
struct ArcInterval {
  CirclePoint start;
  CirclePoint end;

  bool contains(CirclePoint m) const { return in_clockwise_order(start, m, end); }
  double length() const { return clockwise_delta(start, end); }
};

namespace detail {

// Chord length between angles t and t - phi, written with half-angle
// products so short chords keep full relative precision:
//   |E(t) - E(t - phi)| = 2 |sin(phi/2)| sqrt(1 + (a^2 - 1) sin^2(t - phi/2)).
inline double chord_from_offset(double theta, double phi, double a2m1) {
  const double s = std::sin(0.5 * phi);
  const double m = std::sin(theta - 0.5 * phi);
  return 2.0 * std::abs(s) * std::sqrt(1.0 + a2m1 * m * m);
}

// Sign of d/dphi |E(t) - E(t - phi)|^2, up to the positive factor 2 sin(phi/2).
// Positive while the chord still lengthens clockwise.
inline double chord_growth(double theta, double phi, double a2m1) {
  const double half = 0.5 * phi;
  const double mid = theta - half;
  const double sm = std::sin(mid);
  const double w = 1.0 + a2m1 * sm * sm;
  return 2.0 * std::cos(half) * w - std::sin(half) * a2m1 * std::sin(2.0 * mid);
}

// Clockwise offset phi* in (0, 2pi) from p to the farthest point of E_a.
// Distance from p increases strictly on [0, phi*] and decreases after it, so
// phi* is the unique sign change of chord_growth.
inline double farthest_offset(CirclePoint p, Eccentricity a) {
  if (a.is_circle()) return pi;
  const double a2m1 = a.value() * a.value() - 1.0;
  double lo = 0.0;
  double hi = two_pi;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (chord_growth(p.theta(), mid, a2m1) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline double chord_distance(CirclePoint p, CirclePoint q, Eccentricity a) {
  const double a2m1 = a.value() * a.value() - 1.0;
  return detail::chord_from_offset(p.theta(), p.theta() - q.theta(), a2m1);
}

/// The point q whose inward normal line meets E_a again at p. This is the
/// farthest point of E_a from p and closes the clockwise arc on which the
/// chord length from p grows monotonically. On the circle it is -p.
inline CirclePoint normal_antipode(CirclePoint p, Eccentricity a) {
  return CirclePoint(p.theta() - detail::farthest_offset(p, a));
}

}  // namespace evr
