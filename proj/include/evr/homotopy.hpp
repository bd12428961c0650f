#pragma once

// Scale thresholds r1 .. r5 (and r7/2 between the two pole families) for an
// ellipse, and the homotopy type of its Vietoris-Rips complex at scale r read
// off from them. Everything above r2 is conditional on the conjectured shape
// of the side-length profile, and results carry a flag saying so.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "evr/certificates.hpp"
#include "evr/profile.hpp"

namespace evr {

enum class EccentricityRegime { PureOddEven, Critical, Mixed };

inline const char* to_string(EccentricityRegime r) {
  switch (r) {
    case EccentricityRegime::PureOddEven: return "pure-odd-even";
    case EccentricityRegime::Critical: return "critical";
    case EccentricityRegime::Mixed: return "mixed";
  }
  return "?";
}

inline EccentricityRegime regime_of(Situation s) {
  switch (s) {
    case Situation::S1:
    case Situation::S5: return EccentricityRegime::PureOddEven;
    case Situation::S3: return EccentricityRegime::Critical;
    case Situation::S2:
    case Situation::S4: return EccentricityRegime::Mixed;
  }
  return EccentricityRegime::PureOddEven;
}

enum class HomotopyType { Circle, Sphere2, Sphere3, Sphere4, WedgeThreeSphere4, Sphere5, OutOfClassifiedRange };

inline const char* to_string(HomotopyType t) {
  switch (t) {
    case HomotopyType::Circle: return "S1";
    case HomotopyType::Sphere2: return "S2";
    case HomotopyType::Sphere3: return "S3";
    case HomotopyType::Sphere4: return "S4";
    case HomotopyType::WedgeThreeSphere4: return "wedge-3-S4";
    case HomotopyType::Sphere5: return "S5";
    case HomotopyType::OutOfClassifiedRange: return "out-of-classified-range";
  }
  return "?";
}

struct ThresholdOptions {
  int samples = 2000;  // grid density over the full turn; only the fundamental cell is evaluated
  ExtremaOptions extrema{};
};

struct ScaleThresholds {
  double a = 1.0;
  double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0, r5 = 0.0;
  std::optional<double> r7half;
  Situation situation = Situation::S1;
  EccentricityRegime regime = EccentricityRegime::PureOddEven;
  int fast_set_count = 2;  // invariant fast sets just above r3's family, from the 2/5 profile
  double s_east = 0.0;
  double s_north = 0.0;

  bool ordered() const {
    const bool base = r1 <= r2 && r2 < r3 && r3 <= r4 && r4 < r5;
    return base && (!r7half || (r3 < *r7half && *r7half <= r4));
  }
};

namespace detail {

inline double min_sample(const SideProfile& p) {
  double v = p.samples.front().s;
  for (const ProfileSample& q : p.samples) v = std::min(v, q.s);
  return v;
}

inline double max_sample(const SideProfile& p) {
  double v = p.samples.front().s;
  for (const ProfileSample& q : p.samples) v = std::max(v, q.s);
  return v;
}

}  // namespace detail

inline ScaleThresholds thresholds(Eccentricity a, ThresholdOptions opt = {}) {
  if (a.is_circle()) fail(ErrorKind::InvalidParameter, "thresholds need 1 < a < sqrt(2)");
  const SideLengthOptions& side = opt.extrema.side;
  ScaleThresholds t;
  t.a = a.value();
  const TriangleBounds tri = triangle_bounds(a.value());
  t.r1 = tri.r1;
  t.r2 = tri.r2;

  t.s_east = s_east(a, side);
  t.s_north = s_north(a, side);
  const SideProfile five_profile = cell_profile(a, pentagram, opt.samples, side);
  try {
    const ExtremaReport five = find_extrema(five_profile, opt.extrema);
    t.situation = classify_situation(five, a, pentagram, opt.extrema.value_tol, side);
    t.fast_set_count = five.fast_set_count;
    t.r3 = five.global_min;
    t.r4 = five.global_max;
  } catch (const Error& e) {
    // Within about 0.01 of the circle the profile varies by less than its
    // rounding; it is then read as Situation 1 with the sampled extremes.
    if (e.kind() != ErrorKind::DegenerateProfile) throw;
    t.situation = Situation::S1;
    t.fast_set_count = 2;
    t.r3 = std::min(t.s_east, detail::min_sample(five_profile));
    t.r4 = std::max(t.s_north, detail::max_sample(five_profile));
  }
  t.regime = regime_of(t.situation);
  if (t.regime == EccentricityRegime::Mixed) t.r7half = std::max(t.s_east, t.s_north);

  // Close to sqrt 2 the 3/7 profile flattens below double resolution; its
  // smallest sample is then the minimum to working precision.
  const SideProfile seven = cell_profile(a, heptagram, opt.samples, side);
  try {
    t.r5 = find_extrema(seven, opt.extrema).global_min;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateProfile) throw;
    t.r5 = detail::min_sample(seven);
  }
  return t;
}

/// Piecewise lookup, every interval open on the left and closed on the right.
inline HomotopyType classify(const ScaleThresholds& t, double r) {
  if (!(r > 0.0)) fail(ErrorKind::InvalidParameter, "scale r must be positive");
  if (r <= t.r1) return HomotopyType::Circle;
  if (r <= t.r2) return HomotopyType::Sphere2;
  if (r <= t.r3) return HomotopyType::Sphere3;
  if (r <= t.r4) {
    switch (t.regime) {
      case EccentricityRegime::PureOddEven: return HomotopyType::Sphere4;
      case EccentricityRegime::Critical: return HomotopyType::WedgeThreeSphere4;
      case EccentricityRegime::Mixed:
        return r <= *t.r7half ? HomotopyType::Sphere4 : HomotopyType::WedgeThreeSphere4;
    }
  }
  if (r <= t.r5) return HomotopyType::Sphere5;
  return HomotopyType::OutOfClassifiedRange;
}

inline HomotopyType classify(Eccentricity a, double r, ThresholdOptions opt = {}) {
  if (!(r > 0.0)) fail(ErrorKind::InvalidParameter, "scale r must be positive");
  return classify(thresholds(a, opt), r);
}

/// True above r2, where the type depends on the conjectured profile shape.
inline bool conjecture_conditional(const ScaleThresholds& t, double r) { return r > t.r2; }

struct TypeInterval {
  HomotopyType type = HomotopyType::Circle;
  double lo = 0.0;  // exclusive
  double hi = 0.0;  // inclusive
  bool conjecture_conditional = false;
};

struct ClassificationReport {
  ScaleThresholds thresholds;
  std::vector<TypeInterval> intervals;  // increasing in r, contiguous, ending at r5
  std::vector<std::string> notes;
};

inline ClassificationReport classification_report(const ScaleThresholds& t) {
  ClassificationReport rep{.thresholds = t};
  auto add = [&](HomotopyType type, double lo, double hi) {
    rep.intervals.push_back({type, lo, hi, lo >= t.r2});
  };
  add(HomotopyType::Circle, 0.0, t.r1);
  add(HomotopyType::Sphere2, t.r1, t.r2);
  add(HomotopyType::Sphere3, t.r2, t.r3);
  switch (t.regime) {
    case EccentricityRegime::PureOddEven:
      add(HomotopyType::Sphere4, t.r3, t.r4);
      break;
    case EccentricityRegime::Critical:
      add(HomotopyType::WedgeThreeSphere4, t.r3, t.r4);
      break;
    case EccentricityRegime::Mixed:
      add(HomotopyType::Sphere4, t.r3, *t.r7half);
      add(HomotopyType::WedgeThreeSphere4, *t.r7half, t.r4);
      rep.notes.push_back(
          "inclusion from a scale in (r3, r7half] into a scale in (r7half, r4] has rank 1 on H4");
      break;
  }
  add(HomotopyType::Sphere5, t.r4, t.r5);
  rep.notes.push_back("types above r2 assume the conjectured side-length profile shape");
  return rep;
}

inline ClassificationReport classification_report(Eccentricity a, ThresholdOptions opt = {}) {
  return classification_report(thresholds(a, opt));
}

}  // namespace evr
