#pragma once

// Sampling the side-length function over the circle, locating and refining
// its extrema, labelling the qualitative shape (Situations 1-5), and
// bisecting for the eccentricities where the pole-star diameters coincide.

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "evr/certificates.hpp"
#include "evr/golden.hpp"
#include "evr/parallel.hpp"
#include "evr/star.hpp"

namespace evr {

struct ProfileSample {
  double theta = 0.0;
  double s = 0.0;
};

struct SideProfile {
  double a = 1.0;
  WindingTarget target = pentagram;
  std::vector<ProfileSample> samples;  // evenly spaced from theta = 0, increasing

  std::size_t count() const noexcept { return samples.size(); }
};

/// s evaluated at n evenly spaced angles k 2pi / n, k = 0 .. n-1.
inline SideProfile profile(Eccentricity a, WindingTarget target, int n,
                           SideLengthOptions opt = {}) {
  if (n < 100) fail(ErrorKind::InvalidParameter, "profile needs at least 100 samples");
  SideProfile out{.a = a.value(), .target = target};
  out.samples.resize(static_cast<std::size_t>(n));
  parallel_for(out.samples.size(), [&](std::size_t k) {
    const double theta = two_pi * static_cast<double>(k) / n;
    out.samples[k] = {theta, side_length(CirclePoint(theta), a, target, opt)};
  });
  return out;
}

/// First counterclockwise vertex angle of the star through theta = 0. The
/// arc [0, fundamental_cell_end) meets every star exactly once.
inline double fundamental_cell_end(Eccentricity a, WindingTarget target,
                                   SideLengthOptions opt = {}) {
  double end = two_pi;
  for (const CirclePoint& v : star_points(CirclePoint(0.0), a, target, opt).vertices)
    if (v.theta() > 0.0) end = std::min(end, v.theta());
  return end;
}

/// The grid of profile(a, target, n) restricted to the fundamental cell.
/// Enough for find_extrema and several times cheaper than the full turn.
inline SideProfile cell_profile(Eccentricity a, WindingTarget target, int n,
                                SideLengthOptions opt = {}) {
  if (n < 100) fail(ErrorKind::InvalidParameter, "profile needs at least 100 samples");
  const double end = fundamental_cell_end(a, target, opt);
  SideProfile out{.a = a.value(), .target = target};
  for (int k = 0; k < n; ++k) {
    const double theta = two_pi * static_cast<double>(k) / n;
    if (theta >= end) break;
    out.samples.push_back({theta, 0.0});
  }
  parallel_for(out.samples.size(), [&](std::size_t k) {
    out.samples[k].s = side_length(CirclePoint(out.samples[k].theta), a, target, opt);
  });
  return out;
}

struct Extremum {
  double theta = 0.0;
  double value = 0.0;
};

struct ExtremaReport {
  std::vector<Extremum> minima;  // increasing theta
  std::vector<Extremum> maxima;  // increasing theta
  double global_min = 0.0;
  double global_max = 0.0;
  int fast_set_count = 0;   // global-minimum sites / beta
  double value_tol = 0.0;   // equality tolerance used for "global"
  double cell_end = 0.0;    // fundamental cell [0, cell_end) searched for extrema

  /// Number of refined minima lying strictly below `scale`, grouped into
  /// star orbits of beta points each.
  int fast_sets_below(double scale, int beta) const {
    const auto n = std::count_if(minima.begin(), minima.end(),
                                 [&](const Extremum& e) { return e.value < scale; });
    return static_cast<int>(n) / beta;
  }
};

struct ExtremaOptions {
  double refine_tol = 1e-9;   // golden-section bracket width in theta
  double slope_tol = 1e-14;   // sample differences below this count as flat, about 50 ulp at s = 2
  double value_tol = 1e-9;    // equality of extremum values
  SideLengthOptions side{};
};

namespace detail {

inline int slope_sign(double d, double tol) { return d > tol ? 1 : (d < -tol ? -1 : 0); }

}  // namespace detail

/// Extrema of a sampled side-length profile.
///
/// s is constant along star orbits and the profile starts at theta = 0, where
/// the x-axis mirror makes s critical. Every star has exactly one vertex on the
/// cell [0, v) with v the first counterclockwise vertex of the star through 0,
/// so extrema are searched on that cell only, with s(v) = s(0) closing it into
/// a loop, and each one found is spread over the beta vertices of its star.
/// Close to sqrt 2 the pole stars nearly share vertices and the full-circle
/// profile develops features far narrower than the grid; inside the cell they
/// are absent.
///
/// Discrete slopes are taken with a dead zone of slope_tol, so flat runs
/// between a rise and a fall merge into one candidate. Each candidate is
/// refined by golden-section search over the run plus one spacing either side.
inline ExtremaReport find_extrema(const SideProfile& prof, ExtremaOptions opt = {}) {
  const std::size_t n = prof.samples.size();
  if (n < 3) fail(ErrorKind::InvalidParameter, "profile too short for extrema");
  if (prof.samples[0].theta != 0.0)
    fail(ErrorKind::InvalidParameter, "profile must start at theta = 0");
  const Eccentricity a(prof.a);
  const double s0 = prof.samples[0].s;

  auto s_at = [&](double theta) {
    return side_length(CirclePoint(theta), a, prof.target, opt.side);
  };

  const double cell_end = fundamental_cell_end(a, prof.target, opt.side);

  // Cell loop: samples strictly inside [0, cell_end), then the seam point.
  std::vector<ProfileSample> cell;
  for (const ProfileSample& q : prof.samples)
    if (q.theta < cell_end) cell.push_back(q);
  if (cell.size() < 3)
    fail(ErrorKind::DegenerateProfile, "too few samples inside the fundamental cell");
  const std::size_t m = cell.size();
  auto theta_of = [&](std::size_t i) { return i == m ? cell_end : cell[i].theta; };
  auto value_of = [&](std::size_t i) { return i % m == 0 ? s0 : cell[i % m].s; };

  std::vector<int> slope(m);
  for (std::size_t i = 0; i < m; ++i)
    slope[i] = detail::slope_sign(value_of(i + 1) - value_of(i), opt.slope_tol);
  const auto first = std::find_if(slope.begin(), slope.end(), [](int d) { return d != 0; });
  if (first == slope.end())
    fail(ErrorKind::DegenerateProfile, "profile is flat: no isolated extrema");

  struct Candidate {
    double lo, hi;  // bracketing angles; unused for the seam
    bool is_min;
    bool seam;
  };
  std::vector<Candidate> candidates;

  // Segment i joins loop points i and i+1; a change of nonzero slope between
  // segment j and the next nonzero segment k puts an extremum on points
  // j+1 .. k. A run containing point 0 (= point m) is the extremum at theta 0.
  std::size_t j = static_cast<std::size_t>(first - slope.begin());
  for (std::size_t walked = 0; walked < m;) {
    std::size_t k = j + 1;
    while (slope[k % m] == 0) ++k;
    walked += k - j;
    if (slope[k % m] != slope[j % m]) {
      const bool is_min = slope[j % m] < 0;
      const std::size_t jj = j % m, kk = jj + (k - j);
      if (kk >= m)
        candidates.push_back({0.0, 0.0, is_min, true});
      else
        candidates.push_back({theta_of(jj), theta_of(kk + 1), is_min, false});
    }
    j = k;
  }

  std::vector<std::vector<Extremum>> spread(candidates.size());
  std::vector<bool> is_min(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const Candidate& c = candidates[i];
    ScalarExtremum e{0.0, s0};
    if (!c.seam)
      e = c.is_min ? golden_minimize(s_at, c.lo, c.hi, opt.refine_tol)
                   : golden_maximize(s_at, c.lo, c.hi, opt.refine_tol);
    const StarConfig star = star_points(CirclePoint(e.x), a, prof.target, opt.side);
    spread[i].push_back({reduce_angle(e.x), e.value});
    for (std::size_t v = 1; v < star.vertices.size(); ++v)
      spread[i].push_back({star.vertices[v].theta(), e.value});
    is_min[i] = c.is_min;
  });

  ExtremaReport report;
  report.value_tol = opt.value_tol;
  report.cell_end = cell_end;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& dst = is_min[i] ? report.minima : report.maxima;
    dst.insert(dst.end(), spread[i].begin(), spread[i].end());
  }

  auto by_theta = [](const Extremum& x, const Extremum& y) { return x.theta < y.theta; };
  std::sort(report.minima.begin(), report.minima.end(), by_theta);
  std::sort(report.maxima.begin(), report.maxima.end(), by_theta);
  if (report.minima.empty() || report.maxima.empty())
    fail(ErrorKind::DegenerateProfile, "profile has no isolated extrema");

  auto value_less = [](const Extremum& x, const Extremum& y) { return x.value < y.value; };
  report.global_min = std::min_element(report.minima.begin(), report.minima.end(), value_less)->value;
  report.global_max = std::max_element(report.maxima.begin(), report.maxima.end(), value_less)->value;
  const auto at_global = std::count_if(report.minima.begin(), report.minima.end(), [&](const Extremum& e) {
    return e.value <= report.global_min + opt.value_tol;
  });
  report.fast_set_count = static_cast<int>(at_global) / prof.target.beta();
  return report;
}

enum class Situation { S1 = 1, S2, S3, S4, S5 };

inline const char* to_string(Situation s) {
  switch (s) {
    case Situation::S1: return "S1";
    case Situation::S2: return "S2";
    case Situation::S3: return "S3";
    case Situation::S4: return "S4";
    case Situation::S5: return "S5";
  }
  return "?";
}

/// Situation label from extremum counts and which pole family holds the
/// global minimum:
///   S1  2beta extrema, minima on the east/west stars
///   S2  4beta extrema, east/west global, north/south local minima
///   S3  4beta extrema, both pole families equal within tol
///   S4  4beta extrema, north/south global, east/west local minima
///   S5  2beta extrema, minima on the north/south stars
inline Situation classify_situation(const ExtremaReport& report, Eccentricity a,
                                    WindingTarget target = pentagram, double tol = 1e-9,
                                    SideLengthOptions opt = {}) {
  const std::size_t nmin = report.minima.size(), nmax = report.maxima.size();
  const double east = side_length(CirclePoint(0.0), a, target, opt);
  const double north = side_length(CirclePoint(0.5 * pi), a, target, opt);
  const auto beta = static_cast<std::size_t>(target.beta());
  auto unclassifiable = [&](const char* why) -> Situation {
    std::ostringstream os;
    os.precision(17);
    os << why << " (minima=" << nmin << ", maxima=" << nmax << ", s_east=" << east
       << ", s_north=" << north << ", a=" << a.value() << ")";
    fail(ErrorKind::UnclassifiableProfile, os.str());
  };
  if (nmin == 2 * beta && nmax == 2 * beta) {
    // One family of minima; the pole values can agree to far below tol near
    // the circle, so the family is read from the extremum at theta = 0.
    const bool east_is_min = std::any_of(report.minima.begin(), report.minima.end(),
                                         [](const Extremum& e) { return e.theta == 0.0; });
    return east_is_min ? Situation::S1 : Situation::S5;
  }
  if (nmin == 4 * beta && nmax == 4 * beta) {
    if (std::abs(east - north) <= tol) return Situation::S3;
    return east < north ? Situation::S2 : Situation::S4;
  }
  return unclassifiable("extremum counts match no situation");
}

enum class GapSource { Algebraic, Dynamical };

struct GapProbe {
  double a = 0.0;
  double gap = 0.0;
};

struct CriticalSearch {
  double a = 0.0;
  std::vector<GapProbe> trace;  // every evaluation, in order
};

/// Bisection for a root of gap(a) on [lo, hi] down to width tol.
template <class Gap>
CriticalSearch critical_eccentricity(double lo, double hi, double tol, Gap&& gap) {
  if (!(lo < hi) || !(tol > 0.0))
    fail(ErrorKind::InvalidParameter, "critical search needs lo < hi and tol > 0");
  CriticalSearch out;
  auto probe = [&](double a) {
    const double g = gap(Eccentricity(a));
    out.trace.push_back({a, g});
    return g;
  };
  auto done = [&](double a) {
    out.a = a;
    return out;
  };
  double glo = probe(lo);
  const double ghi = probe(hi);
  if (glo == 0.0) return done(lo);
  if (ghi == 0.0) return done(hi);
  if ((glo > 0.0) == (ghi > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "gap has the same sign at a=" << lo << " (" << glo << ") and a=" << hi << " (" << ghi
       << ")";
    fail(ErrorKind::NoSignChange, os.str());
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double g = probe(mid);
    if (g == 0.0) return done(mid);
    if ((g > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = g;
    } else {
      hi = mid;
    }
  }
  return done(0.5 * (lo + hi));
}

inline CriticalSearch critical_eccentricity(double lo, double hi, double tol,
                                            GapSource source = GapSource::Algebraic) {
  if (source == GapSource::Algebraic)
    return critical_eccentricity(lo, hi, tol, [](Eccentricity a) { return pole_gap_algebraic(a); });
  return critical_eccentricity(lo, hi, tol, [](Eccentricity a) { return pole_gap(a); });
}

}  // namespace evr
