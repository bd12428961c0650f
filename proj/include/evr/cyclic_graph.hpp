#pragma once

// Finite cyclic graphs: vertices on the circle in clockwise order, each with
// an out-neighbourhood that is a clockwise run starting at the vertex itself.
// Such a graph is fully described by the index of the clockwise-most
// out-neighbour, stored unwrapped in [i, i + n - 1].

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "evr/ellipse.hpp"

namespace evr {

struct CyclicGraphData {
  std::vector<CirclePoint> vertices;   // strict clockwise order
  std::vector<std::size_t> out_reach;  // unwrapped: out_reach[i] in [i, i + n - 1]

  std::size_t size() const noexcept { return vertices.size(); }

  bool has_edge(std::size_t u, std::size_t v) const {
    const std::size_t n = size();
    const std::size_t ahead = (v + n - u) % n;
    return ahead > 0 && u + ahead <= out_reach[u];
  }
};

struct PeriodicOrbit {
  std::size_t length_l = 0;
  std::size_t winding_w = 0;
  std::vector<std::size_t> orbit;  // vertex indices, orbit[0] is the first repeated vertex
};

struct WindingFractionResult {
  std::size_t numerator = 0;
  std::size_t denominator = 1;
  bool attained = true;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

namespace detail {

inline void require_nonempty(const CyclicGraphData& g) {
  if (g.size() == 0) fail(ErrorKind::EmptyGraph, "cyclic graph has no vertices");
}

inline void require_vertex(const CyclicGraphData& g, std::size_t v) {
  require_nonempty(g);
  if (v >= g.size()) fail(ErrorKind::InvalidParameter, "vertex index out of range");
}

}  // namespace detail

/// Checks the reach encoding: each reach lies in [i, i + n - 1] and reaches
/// never retreat going clockwise, so v -> u forces w -> u for v < w < u.
inline bool is_cyclic(const CyclicGraphData& g) {
  const std::size_t n = g.size();
  if (g.out_reach.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.out_reach[i] < i || g.out_reach[i] > i + n - 1) return false;
    const std::size_t next = i + 1 < n ? g.out_reach[i + 1] : g.out_reach[0] + n;
    if (next < g.out_reach[i]) return false;
  }
  return true;
}

/// C_n^k: n evenly spaced vertices, vertex i at angle -2 pi i / n, edges
/// i -> i + s for s = 0 .. k.
inline CyclicGraphData standard_cnk(std::size_t n, std::size_t k) {
  if (n == 0) fail(ErrorKind::EmptyGraph, "C_n^k needs n >= 1");
  if (2 * k > n) {
    std::ostringstream os;
    os << "C_n^k needs k <= n/2 (n=" << n << ", k=" << k << ")";
    fail(ErrorKind::InvalidParameter, os.str());
  }
  CyclicGraphData g;
  g.vertices.reserve(n);
  g.out_reach.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.emplace_back(-two_pi * static_cast<double>(i) / static_cast<double>(n));
    g.out_reach.push_back(i + k);
  }
  return g;
}

/// Graph on n evenly spaced vertices from directed edges (u, v), where v is
/// read as lying clockwise after u. Rejects edge sets that are not cyclic.
inline CyclicGraphData from_edges(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  CyclicGraphData g = standard_cnk(n, 0);
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) fail(ErrorKind::InvalidParameter, "edge endpoint out of range");
    if (u != v) out[u][(v + n - u) % n] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t run = 0;
    while (run + 1 < n && out[u][run + 1]) ++run;
    for (std::size_t s = run + 1; s < n; ++s)
      if (out[u][s]) {
        std::ostringstream os;
        os << "edge " << u << " -> " << (u + s) % n << " skips vertex " << (u + run + 1) % n;
        fail(ErrorKind::InvalidParameter, "not a cyclic graph: " + os.str());
      }
    g.out_reach[u] = u + run;
  }
  if (!is_cyclic(g)) fail(ErrorKind::InvalidParameter, "not a cyclic graph: reach retreats");
  return g;
}

/// Vietoris-Rips 1-skeleton of points on E_a, oriented clockwise: u -> v iff
/// v lies on the clockwise arc from u to its farthest point and
/// |E(u) - E(v)| < r. Points are reordered clockwise starting from points[0].
inline CyclicGraphData build_vr_graph(std::vector<CirclePoint> points, Eccentricity a, double r) {
  if (points.empty()) fail(ErrorKind::EmptyGraph, "no sample points");
  if (!(r > 0.0)) fail(ErrorKind::InvalidParameter, "scale r must be positive");
  const CirclePoint origin = points.front();
  std::sort(points.begin(), points.end(), [&](CirclePoint p, CirclePoint q) {
    return clockwise_delta(origin, p) < clockwise_delta(origin, q);
  });
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    fail(ErrorKind::InvalidParameter, "sample points must be pairwise distinct");

  const std::size_t n = points.size();
  CyclicGraphData g;
  g.vertices = std::move(points);
  g.out_reach.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CirclePoint u = g.vertices[i];
    const double arc = detail::farthest_offset(u, a);
    std::size_t reach = i;
    // Distance from u grows along the arc, so the neighbours form a prefix.
    while (reach + 1 < i + n) {
      const CirclePoint v = g.vertices[(reach + 1) % n];
      if (clockwise_delta(u, v) > arc || !(chord_distance(u, v, a) < r)) break;
      ++reach;
    }
    g.out_reach[i] = reach;
  }
  if (!is_cyclic(g))
    fail(ErrorKind::InvalidParameter, "Vietoris-Rips graph at this scale is not cyclic");
  return g;
}

/// f(v): the clockwise-most vertex of the closed out-neighbourhood of v.
inline std::size_t dynamics_step(const CyclicGraphData& g, std::size_t v) {
  detail::require_vertex(g, v);
  return g.out_reach[v] % g.size();
}

/// Iterates f from start until a vertex repeats and returns the cycle. The
/// winding is the total index advance around the cycle divided by n.
inline PeriodicOrbit periodic_orbit(const CyclicGraphData& g, std::size_t start) {
  detail::require_vertex(g, start);
  const std::size_t n = g.size();
  std::vector<std::size_t> seen_at(n, n);
  std::vector<std::size_t> path;
  std::size_t v = start;
  while (seen_at[v] == n) {
    seen_at[v] = path.size();
    path.push_back(v);
    v = g.out_reach[v] % n;
  }
  PeriodicOrbit orbit;
  orbit.orbit.assign(path.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), path.end());
  orbit.length_l = orbit.orbit.size();
  std::size_t advance = 0;
  for (std::size_t u : orbit.orbit) advance += g.out_reach[u] - u;
  orbit.winding_w = advance / n;
  return orbit;
}

/// wf(G) = omega / l of the periodic orbit reached from vertex 0, reduced.
inline WindingFractionResult winding_fraction(const CyclicGraphData& g) {
  detail::require_nonempty(g);
  const PeriodicOrbit orbit = periodic_orbit(g, 0);
  const std::size_t d = std::gcd(orbit.winding_w, orbit.length_l);
  return {orbit.winding_w / d, orbit.length_l / d, true};
}

/// Largest total clockwise angle over directed paths v0 -> ... -> vm from v.
/// In a cyclic graph the greedy clockwise-most path is optimal.
inline double gamma_m(const CyclicGraphData& g, std::size_t v, std::size_t m) {
  detail::require_vertex(g, v);
  if (m < 1) fail(ErrorKind::InvalidParameter, "gamma_m needs m >= 1");
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t u = g.out_reach[v] % g.size();
    if (u != v) total += clockwise_delta(g.vertices[v], g.vertices[u]);
    v = u;
  }
  return total;
}

/// n points evenly spaced in angle, clockwise from theta = 0.
inline std::vector<CirclePoint> even_samples(std::size_t n) {
  std::vector<CirclePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pts.emplace_back(-two_pi * static_cast<double>(i) / static_cast<double>(n));
  return pts;
}

}  // namespace evr
