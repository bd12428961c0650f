#pragma once

#include <limits>
#include <sstream>
#include <vector>

#include "evr/ellipse.hpp"

namespace evr {

struct StepOutcome {
  CirclePoint point;
  double delta = 0.0;  // clockwise angle travelled, in (0, phi*]
};

struct OrbitTrace {
  std::vector<CirclePoint> points;  // points[0] is the start, points[i] = F^i
  std::vector<double> deltas;       // deltas[i] is the angle from points[i] to points[i+1]
  double winding = 0.0;             // sum(deltas) / 2pi
};

namespace detail {

// Clockwise offset in [0, phi_max] at which the chord from p reaches r.
// chord_from_offset is strictly increasing on that interval.
inline double step_offset(double theta, double r, double a2m1, double phi_max) {
  double lo = 0.0;
  double hi = phi_max;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (chord_from_offset(theta, mid, a2m1) < r)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

[[noreturn]] inline void radius_unreachable(CirclePoint p, double r, double r_max) {
  std::ostringstream os;
  os.precision(17);
  os << "radius " << r << " exceeds the farthest chord " << r_max << " from theta=" << p.theta();
  fail(ErrorKind::RadiusUnreachable, os.str());
}

}  // namespace detail

/// One clockwise step of chord length r: the first point q clockwise of p with
/// |E(p) - E(q)| = r, searched on the arc from p to its farthest point.
inline StepOutcome step(CirclePoint p, double r, Eccentricity a) {
  if (!(r > 0.0)) fail(ErrorKind::InvalidParameter, "step radius must be positive");
  const double a2m1 = a.value() * a.value() - 1.0;
  const double phi_max = detail::farthest_offset(p, a);
  const double r_max = detail::chord_from_offset(p.theta(), phi_max, a2m1);
  // r_max carries a few ulps of rounding; the pole chords equal 2 exactly.
  if (r > r_max * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()))
    detail::radius_unreachable(p, r, r_max);
  const double phi = r >= r_max ? phi_max : detail::step_offset(p.theta(), r, a2m1, phi_max);
  return {CirclePoint(p.theta() - phi), phi};
}

inline OrbitTrace step_n(CirclePoint p, double r, Eccentricity a, int n) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "step count must be positive");
  OrbitTrace trace;
  trace.points.reserve(static_cast<std::size_t>(n) + 1);
  trace.deltas.reserve(static_cast<std::size_t>(n));
  trace.points.push_back(p);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const StepOutcome s = step(trace.points.back(), r, a);
    trace.points.push_back(s.point);
    trace.deltas.push_back(s.delta);
    total += s.delta;
  }
  trace.winding = total / two_pi;
  return trace;
}

/// Total clockwise angle of n steps from p, in loops.
inline double winding_count(CirclePoint p, double r, Eccentricity a, int n) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "step count must be positive");
  double total = 0.0;
  CirclePoint cur = p;
  for (int i = 0; i < n; ++i) {
    const StepOutcome s = step(cur, r, a);
    total += s.delta;
    cur = s.point;
  }
  return total / two_pi;
}

}  // namespace evr
