// Acceptance run: one PASS/FAIL line per criterion, with the measured values
// and wall time. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "evr/evr.hpp"

using namespace evr;

namespace {

std::mt19937_64 gen(97531);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }

double plane_distance(double t1, double t2, double a) {
  return std::hypot(a * std::cos(t1) - a * std::cos(t2), std::sin(t1) - std::sin(t2));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));

void note(Outcome& o, bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  o.pass = o.pass && ok;
  o.detail += std::string("\n      ") + (ok ? "ok   " : "FAIL ") + buf;
}

// Informational line; does not affect the verdict.
void info(Outcome& o, const std::string& text) { o.detail += "\n      info " + text; }

int failures = 0;

void run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    note(o, false, "exception: %s", e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

double timed(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Cyclic graphs on n evenly spaced vertices, by their reach sequences.
void for_each_cyclic_graph(std::size_t n, const std::function<void(const CyclicGraphData&)>& visit) {
  CyclicGraphData g = standard_cnk(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      visit(g);
      return;
    }
    const std::size_t lo = i == 0 ? 0 : std::max(i, g.out_reach[i - 1]);
    const std::size_t hi = i == 0 ? n - 1 : std::min(i + n - 1, g.out_reach[0] + n);
    for (std::size_t r = lo; r <= hi; ++r) {
      g.out_reach[i] = r;
      rec(i + 1);
    }
  };
  rec(0);
}

// Largest index advance over m-step paths from every vertex, over the
// explicit edge relation.
void max_advance_dp(const CyclicGraphData& g, std::size_t m, std::vector<std::size_t>& best,
                    std::vector<std::size_t>& next) {
  const std::size_t n = g.size();
  best.assign(n, 0);
  next.assign(n, 0);
  for (std::size_t step = 0; step < m; ++step) {
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t b = best[u];
      for (std::size_t s = 1; s < n; ++s)
        if (g.has_edge(u, (u + s) % n)) b = std::max(b, s + best[(u + s) % n]);
      next[u] = b;
    }
    std::swap(best, next);
  }
}

std::size_t max_advance_listed(const CyclicGraphData& g, std::size_t v, std::size_t m) {
  if (m == 0) return 0;
  const std::size_t n = g.size();
  std::size_t best = max_advance_listed(g, v, m - 1);
  for (std::size_t s = 1; s < n; ++s)
    if (g.has_edge(v, (v + s) % n)) best = std::max(best, s + max_advance_listed(g, (v + s) % n, m - 1));
  return best;
}

Situation situation_at(double a, int samples) {
  const Eccentricity ecc(a);
  return classify_situation(find_extrema(cell_profile(ecc, pentagram, samples)), ecc);
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  run(1, "polynomial roots at a = 1.32", [](Outcome& o) {
    std::vector<RootInterval> pn, pe;
    const double r2 = triangle_bounds(1.32).r2;
    const double secs = timed([&] {
      pn = isolate_star_roots(north_pole_polynomial(), 1.32, r2, 2.2);
      pe = isolate_star_roots(east_pole_polynomial(), 1.32, r2, 2.2);
    });
    note(o, pn.size() == 1 && pe.size() == 1, "one root each above r2: PN %zu, PE %zu", pn.size(), pe.size());
    if (pn.size() != 1 || pe.size() != 1) return;
    const double n = pn[0].midpoint(), e = pe[0].midpoint();
    note(o, std::abs(n - 1.99934602760558) <= 1e-9, "PN root %.15f, |diff| %.2e", n, std::abs(n - 1.99934602760558));
    note(o, std::abs(e - 1.99934434212106) <= 1e-9, "PE root %.15f, |diff| %.2e", e, std::abs(e - 1.99934434212106));
    note(o, secs < 1.0, "runtime %.3f s < 1 s", secs);
  });

  run(2, "pole-gap sign table", [](Outcome& o) {
    const std::vector<std::pair<double, double>> table = {{1.32, +1.68548452283979e-6},
                                                          {1.34, -1.62962280314538e-6},
                                                          {1.4, -3.13760593217971e-6},
                                                          {1.414, +5.834802545567896e-7}};
    for (auto [a, want] : table) {
      const double got = pole_gap_algebraic(Eccentricity(a));
      note(o, std::abs(got - want) <= 1e-8 && (got > 0) == (want > 0), "D(%.3f) = %+.14e, |diff| %.2e", a, got,
           std::abs(got - want));
    }
  });

  run(3, "critical eccentricities by bisection", [](Outcome& o) {
    CriticalSearch c1, c2;
    const double t1 = timed([&] { c1 = critical_eccentricity(1.32, 1.34, 1e-6); });
    const double t2 = timed([&] { c2 = critical_eccentricity(1.4, 1.414, 1e-6); });
    note(o, std::abs(c1.a - 1.3299) <= 1e-3, "a1 = %.9f (%zu probes)", c1.a, c1.trace.size());
    note(o, std::abs(c2.a - 1.4123) <= 1e-3, "a2 = %.9f (%zu probes)", c2.a, c2.trace.size());
    note(o, t1 < 30.0 && t2 < 30.0, "runtimes %.2f s, %.2f s < 30 s", t1, t2);
    CriticalSearch d1;
    const double t3 = timed([&] { d1 = critical_eccentricity(1.32, 1.34, 1e-6, GapSource::Dynamical); });
    note(o, std::abs(d1.a - 1.3299) <= 1e-3 && t3 < 30.0, "dynamical a1 = %.9f in %.2f s", d1.a, t3);
  });

  run(4, "circle reductions", [](Outcome& o) {
    const Eccentricity circle(1.0);
    const std::vector<std::pair<WindingTarget, double>> cases = {
        {triangle, std::sqrt(3.0)}, {pentagram, 2 * std::sin(2 * pi / 5)}, {heptagram, 2 * std::sin(3 * pi / 7)}};
    for (const auto& [target, want] : cases) {
      double worst = 0.0;
      for (double t : {0.0, 0.3, 1.0, 2.5, 4.0, 5.9}) worst = std::max(worst, std::abs(side_length(CirclePoint(t), circle, target) - want));
      note(o, worst <= 1e-10, "target %s: max |s - closed form| %.2e", target.str().c_str(), worst);
    }
  });

  run(5, "dynamical and algebraic pole stars agree at a = 1.32", [](Outcome& o) {
    const Eccentricity a(1.32);
    const double n = pole_star_root(north_pole_polynomial(), 1.32).midpoint();
    const double e = pole_star_root(east_pole_polynomial(), 1.32).midpoint();
    note(o, std::abs(s_north(a) - n) <= 1e-8, "|s_north - PN root| %.2e", std::abs(s_north(a) - n));
    note(o, std::abs(s_east(a) - e) <= 1e-8, "|s_east - PE root| %.2e", std::abs(s_east(a) - e));
  });

  run(6, "situation classification", [](Outcome& o) {
    const double a1 = critical_eccentricity(1.32, 1.34, 1e-9).a;
    struct Case {
      double a;
      Situation want;
    };
    const std::vector<Case> cases = {{1.2, Situation::S1}, {a1, Situation::S3}, {1.38, Situation::S5},
                                     {1.31, Situation::S2}, {1.35, Situation::S4}};
    double secs = 0.0;
    for (const Case& c : cases) {
      Situation got{};
      secs += timed([&] { got = situation_at(c.a, 2000); });
      note(o, got == c.want, "a = %.9f: %s (want %s)", c.a, to_string(got), to_string(c.want));
    }
    note(o, secs < 300.0, "scan at 2000 samples in %.1f s < 300 s", secs);
    // Not part of the verdict: where the mixed shapes are actually found.
    for (double a : {1.3297, 1.3302}) info(o, "a = " + std::to_string(a) + ": " + to_string(situation_at(a, 2000)));
  });

  run(7, "cyclic graphs", [](Outcome& o) {
    const WindingFractionResult c82 = winding_fraction(standard_cnk(8, 2));
    note(o, c82.numerator == 1 && c82.denominator == 4, "wf(C_8^2) = %zu/%zu", c82.numerator, c82.denominator);
    const CyclicGraphData right = from_edges(
        9, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {8, 0}});
    const WindingFractionResult wr = winding_fraction(right);
    note(o, wr.numerator == 1 && wr.denominator == 5, "wf(example graph) = %zu/%zu", wr.numerator, wr.denominator);

    bool uniform_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 50)(gen);
      CyclicGraphData g = standard_cnk(n, 0);
      auto pick = [](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(gen); };
      g.out_reach[0] = pick(0, n - 1);
      for (std::size_t i = 1; i < n; ++i) g.out_reach[i] = pick(std::max(i, g.out_reach[i - 1]), std::min(i + n - 1, g.out_reach[0] + n));
      uniform_ok = uniform_ok && is_cyclic(g);
      const PeriodicOrbit first = periodic_orbit(g, 0);
      for (std::size_t v = 0; v < n; ++v) {
        const PeriodicOrbit p = periodic_orbit(g, v);
        uniform_ok = uniform_ok && p.length_l == first.length_l && p.winding_w == first.winding_w;
      }
    }
    note(o, uniform_ok, "(l, w) identical from every start on 100 random graphs, n <= 50");

    std::size_t graphs = 0, mismatches = 0;
    std::vector<std::size_t> best, scratch;
    const double secs = timed([&] {
      for (std::size_t n = 1; n <= 12; ++n)
        for_each_cyclic_graph(n, [&](const CyclicGraphData& g) {
          ++graphs;
          const std::size_t m = n + 1;
          max_advance_dp(g, m, best, scratch);
          for (std::size_t v = 0; v < n; ++v) {
            const double want = two_pi * static_cast<double>(best[v]) / static_cast<double>(n);
            if (std::abs(gamma_m(g, v, m) - want) > 1e-11) ++mismatches;
          }
          if (n <= 6)
            for (std::size_t mm = 1; mm <= 4; ++mm)
              for (std::size_t v = 0; v < n; ++v) {
                const double want = two_pi * static_cast<double>(max_advance_listed(g, v, mm)) / static_cast<double>(n);
                if (std::abs(gamma_m(g, v, mm) - want) > 1e-11) ++mismatches;
              }
        });
    });
    note(o, mismatches == 0, "gamma_m = exhaustive maximum on all %zu cyclic graphs with n <= 12 (%zu mismatches, %.1f s)", graphs,
         mismatches, secs);
  });

  run(8, "property suites", [](Outcome& o) {
    double worst_chord = 0.0;
    int r_bad = 0, a_bad = 0, w_bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const double a = uniform(1.0, 1.414), t = uniform(0, two_pi);
      const double r = uniform(0.01, 1.0) * plane_distance(t, t + pi, a);
      const StepOutcome s = step(CirclePoint(t), r, Eccentricity(a));
      worst_chord = std::max(worst_chord, std::abs(plane_distance(t, s.point.theta(), a) - r));
    }
    note(o, worst_chord <= 1e-11, "step exactness: max |chord - r| %.2e on 1000 draws", worst_chord);
    for (int i = 0; i < 1000; ++i) {
      const double a = uniform(1.0, 1.414), t = uniform(0, two_pi);
      double r1 = uniform(0.01, 1.0) * plane_distance(t, t + pi, a), r2 = uniform(0.01, 1.0) * plane_distance(t, t + pi, a);
      if (r1 > r2) std::swap(r1, r2);
      const CirclePoint p(t);
      const StepOutcome s1 = step(p, r1, Eccentricity(a)), s2 = step(p, r2, Eccentricity(a));
      if (!(s1.delta <= s2.delta)) ++r_bad;
    }
    note(o, r_bad == 0, "step clockwise-monotone in r: %d violations / 1000", r_bad);
    for (int i = 0; i < 1000; ++i) {
      double a1 = uniform(1.0, 1.414), a2 = uniform(1.0, 1.414);
      if (a1 > a2) std::swap(a1, a2);
      const double t = uniform(0, two_pi);
      const double r = uniform(0.01, 1.0) * std::min(plane_distance(t, t + pi, a1), plane_distance(t, t + pi, a2));
      if (!(step(CirclePoint(t), r, Eccentricity(a2)).delta <= step(CirclePoint(t), r, Eccentricity(a1)).delta)) ++a_bad;
    }
    note(o, a_bad == 0, "step counter-clockwise-monotone in a: %d violations / 1000", a_bad);

    // Closure on an even grid in a up to 1.414 plus random draws, all targets.
    for (const WindingTarget& target : {triangle, pentagram, heptagram}) {
      double worst = 0.0, worst_a = 0.0;
      for (int i = 0; i < 60; ++i) {
        const double a = i < 30 ? 1.0 + 0.414 * i / 29.0 : uniform(1.0, 1.414);
        const CirclePoint p(uniform(0, two_pi));
        const double s = side_length(p, Eccentricity(a), target);
        const double err = std::abs(winding_count(p, s, Eccentricity(a), target.beta()) - target.alpha());
        if (err > worst) {
          worst = err;
          worst_a = a;
        }
      }
      note(o, worst <= 1e-8, "star closure %s: max |winding - alpha| %.2e (at a = %.4f)", target.str().c_str(), worst, worst_a);
    }

    {
      // No double radius closes the 3/7 star here: the neighbours of s straddle 3.
      const Eccentricity a(1.414);
      const CirclePoint p(0.0);
      const double s = side_length(p, a, heptagram);
      char buf[200];
      std::snprintf(buf, sizeof buf, "3/7 at a = 1.414: winding - 3 at the doubles below and above s: %+.2e, %+.2e",
                    winding_count(p, std::nextafter(s, 0.0), a, 7) - 3, winding_count(p, std::nextafter(s, 4.0), a, 7) - 3);
      info(o, buf);
    }

    double orbit_worst = 0.0, sym_worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Eccentricity a(uniform(1.0, 1.414));
      const double t = uniform(0, two_pi);
      const StarConfig star = star_points(CirclePoint(t), a, pentagram);
      for (const CirclePoint& v : star.vertices) orbit_worst = std::max(orbit_worst, std::abs(side_length(v, a, pentagram) - star.diameter));
      for (double u : {-t, pi - t, pi + t}) sym_worst = std::max(sym_worst, std::abs(side_length(CirclePoint(u), a, pentagram) - star.diameter));
    }
    note(o, orbit_worst <= 2e-10, "s constant along star orbits: max dev %.2e", orbit_worst);
    note(o, sym_worst <= 2e-10, "s four-fold symmetric: max dev %.2e", sym_worst);

    for (int i = 0; i < 300; ++i) {
      const double a = uniform(1.0, 1.414), t = uniform(0, two_pi);
      double r1 = uniform(0.1, 1.999), r2 = uniform(0.1, 1.999);
      if (r1 > r2) std::swap(r1, r2);
      const int n = 1 + static_cast<int>(uniform(0, 12));
      if (winding_count(CirclePoint(t), r1, Eccentricity(a), n) > winding_count(CirclePoint(t), r2, Eccentricity(a), n)) ++w_bad;
    }
    note(o, w_bad == 0, "winding_count monotone in r: %d violations / 300", w_bad);
  });

  run(9, "circle-limit collapse at a = 1.01", [](Outcome& o) {
    const ScaleThresholds t = thresholds(Eccentricity(1.01));
    note(o, t.r2 - t.r1 < 1e-3, "r2 - r1 = %.3e", t.r2 - t.r1);
    note(o, t.r4 - t.r3 < 1e-3, "r4 - r3 = %.3e", t.r4 - t.r3);
  });

  run(10, "star system residuals", [](Outcome& o) {
    double sys = 0.0;
    for (int i = 0; i < 50; ++i) {
      const StarConfig star = star_points(CirclePoint(uniform(0, two_pi)), Eccentricity(uniform(1.0, 1.414)), pentagram);
      sys = std::max(sys, star_system_residual(star));
    }
    note(o, sys <= 1e-8, "ten-equation system residual on 50 stars: %.2e", sys);
    double north = 0.0, east = 0.0;
    for (double a : {1.05, 1.2, 1.32, 1.3299, 1.38, 1.41}) {
      north = std::max(north, north_symmetry_residual(star_points(CirclePoint(0.5 * pi), Eccentricity(a), pentagram)));
      east = std::max(east, east_symmetry_residual(star_points(CirclePoint(0.0), Eccentricity(a), pentagram)));
    }
    note(o, north <= 1e-8, "north-pole symmetry residual: %.2e", north);
    note(o, east <= 1e-8, "east-pole symmetry residual: %.2e", east);
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
