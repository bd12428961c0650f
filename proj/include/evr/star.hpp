#pragma once

// Inscribed equilateral stars: beta chords of equal length whose arcs wind
// alpha times around E_a. The side-length function s(p) is the smallest chord
// length for which beta clockwise steps from p complete alpha loops.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "evr/step.hpp"

namespace evr {

/// alpha loops in beta steps; coprime with 2 alpha < beta.
class WindingTarget {
 public:
  WindingTarget(int alpha, int beta) : alpha_(alpha), beta_(beta) {
    if (alpha < 1 || beta < 1 || std::gcd(alpha, beta) != 1 || 2 * alpha >= beta) {
      std::ostringstream os;
      os << "winding target " << alpha << "/" << beta
         << " must be coprime with 0 < alpha/beta < 1/2";
      fail(ErrorKind::InvalidParameter, os.str());
    }
  }

  /// Parses "alpha/beta".
  static WindingTarget parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) fail(ErrorKind::InvalidParameter, "target must look like 2/5");
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      const int alpha = std::stoi(num, &used_a);
      const int beta = std::stoi(den, &used_b);
      if (used_a != num.size() || used_b != den.size()) throw std::invalid_argument(text);
      return WindingTarget(alpha, beta);
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidParameter, "cannot parse target '" + text + "'");
    }
  }

  int alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }
  double ratio() const noexcept { return static_cast<double>(alpha_) / beta_; }
  std::string str() const { return std::to_string(alpha_) + "/" + std::to_string(beta_); }

  friend bool operator==(const WindingTarget&, const WindingTarget&) = default;

 private:
  int alpha_;
  int beta_;
};

inline const WindingTarget pentagram{2, 5};
inline const WindingTarget triangle{1, 3};
inline const WindingTarget heptagram{3, 7};

struct SideLengthOptions {
  // Bracket width at which the radius bisection stops. 0 runs it down to
  // adjacent doubles: the 2/5 and 3/7 windings are very sensitive to r close
  // to sqrt 2, and a 1e-11 bracket leaves the star open by up to 1e-7 there.
  double r_tol = 0.0;
};

namespace detail {

// Does the beta-step orbit at radius r wind at least alpha times? Partial
// sums only grow, so the walk stops as soon as the answer is known.
inline bool reaches_winding(CirclePoint p, double r, Eccentricity a, WindingTarget t) {
  const double goal = t.alpha() * two_pi;
  double total = 0.0;
  CirclePoint cur = p;
  for (int i = 0; i < t.beta(); ++i) {
    const StepOutcome s = step(cur, r, a);
    total += s.delta;
    if (total >= goal) return true;
    cur = s.point;
  }
  return false;
}

inline bool reaches_winding_or_unreachable(CirclePoint p, double r, Eccentricity a,
                                           WindingTarget t) {
  try {
    return reaches_winding(p, r, a, t);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RadiusUnreachable) throw;
    std::ostringstream os;
    os.precision(17);
    os << "target " << t.str() << " from theta=" << p.theta() << " at a=" << a.value()
       << " needs radius beyond the reachable range (" << e.what() << ")";
    fail(ErrorKind::TargetUnreachable, os.str());
  }
}

}  // namespace detail

/// Infimal chord length r with winding_count(p, r, a, beta) >= alpha.
///
/// Bisection on r. Winding is monotone in r, the lower end 0 never winds and
/// the upper end starts at the minor-axis length 2, which every point of a
/// small-eccentricity ellipse can reach. Targets closing above 2 push the
/// upper end up by 1e-9, 4e-9, 1.6e-8, ... until it winds; a radius no
/// longer reachable from some orbit point means the target is unattainable.
inline double side_length(CirclePoint p, Eccentricity a, WindingTarget target,
                          SideLengthOptions opt = {}) {
  double lo = 0.0;
  double hi = 2.0;
  const double ceiling = 2.0 * a.value();
  double excess = 1e-9;
  int grow = 0;
  while (!detail::reaches_winding_or_unreachable(p, hi, a, target)) {
    lo = hi;
    hi = std::min(2.0 + excess, ceiling);
    excess *= 4.0;
    if (++grow > 60 || hi <= lo) {
      std::ostringstream os;
      os.precision(17);
      os << "target " << target.str() << " not attained below radius " << hi;
      fail(ErrorKind::TargetUnreachable, os.str());
    }
  }
  while (hi - lo > opt.r_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (detail::reaches_winding_or_unreachable(p, mid, a, target))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

struct StarConfig {
  CirclePoint base;
  std::vector<CirclePoint> vertices;  // traversal order, vertices[0] == base
  double diameter = 0.0;
  WindingTarget target = pentagram;
  double a = 1.0;
  OrbitTrace orbit;       // beta steps at the diameter, orbit.points.back() ~ base
  double closure_gap = 0.0;  // signed angle from the orbit end back to base, in (-pi, pi]
};

inline StarConfig star_points(CirclePoint p, Eccentricity a, WindingTarget target,
                              SideLengthOptions opt = {}) {
  StarConfig star{.base = p, .target = target, .a = a.value()};
  star.diameter = side_length(p, a, target, opt);
  star.orbit = step_n(p, star.diameter, a, target.beta());
  star.vertices.assign(star.orbit.points.begin(), star.orbit.points.end() - 1);
  double gap = clockwise_delta(star.orbit.points.back(), p);
  if (gap > pi) gap -= two_pi;
  star.closure_gap = gap;
  return star;
}

inline double s_north(Eccentricity a, SideLengthOptions opt = {}) {
  return side_length(CirclePoint(0.5 * pi), a, pentagram, opt);
}

inline double s_east(Eccentricity a, SideLengthOptions opt = {}) {
  return side_length(CirclePoint(0.0), a, pentagram, opt);
}

/// D(a) = s_north(a) - s_east(a), evaluated through the step dynamics.
inline double pole_gap(Eccentricity a, SideLengthOptions opt = {}) {
  return s_north(a, opt) - s_east(a, opt);
}

}  // namespace evr
