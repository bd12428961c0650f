#pragma once

// Elimination polynomials for pole-based pentagrams, the inscribed-triangle
// bounds, and sign-certified real root isolation.
//
// P_N(a, r) vanishes at the diameter of the pentagram based at (0, 1) and
// P_E(a, r) at the one based at (a, 0). Both also vanish at triangle
// diameters, all of which are <= r2(a); pentagram diameters are strictly
// larger, so roots above r2(a) are the star diameters.
//
// Evaluation runs in long double with a running rounding bound, so every
// reported sign is certified against the arithmetic error of the evaluation
// itself (not against the coefficients, which are exact integers).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "evr/star.hpp"

namespace evr {

struct Term {
  int deg_a = 0;
  int deg_r = 0;
  std::int64_t coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

class BivariatePolynomial {
 public:
  BivariatePolynomial(std::string name, std::vector<Term> terms)
      : name_(std::move(name)), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
      return std::tie(y.deg_r, y.deg_a) < std::tie(x.deg_r, x.deg_a);
    });
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      if (t.coeff == 0 || t.deg_a < 0 || t.deg_r < 0)
        fail(ErrorKind::InvalidParameter, name_ + ": zero coefficient or negative degree");
      if (i > 0 && terms_[i - 1].deg_a == t.deg_a && terms_[i - 1].deg_r == t.deg_r)
        fail(ErrorKind::InvalidParameter, name_ + ": duplicate monomial");
      max_deg_a_ = std::max(max_deg_a_, t.deg_a);
      max_deg_r_ = std::max(max_deg_r_, t.deg_r);
    }
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int degree_a() const noexcept { return max_deg_a_; }
  int degree_r() const noexcept { return max_deg_r_; }

  /// Coefficient of a^deg_a r^deg_r, zero when absent.
  std::int64_t coefficient(int deg_a, int deg_r) const {
    for (const Term& t : terms_)
      if (t.deg_a == deg_a && t.deg_r == deg_r) return t.coeff;
    return 0;
  }

 private:
  std::string name_;
  std::vector<Term> terms_;
  int max_deg_a_ = 0;
  int max_deg_r_ = 0;
};

// clang-format off
inline const BivariatePolynomial& north_pole_polynomial() {
  static const BivariatePolynomial p("PN", {
      {24, 14, 50625},     {24, 12, -432000},    {22, 14, 40500},      {24, 10, -576000},
      {22, 12, 1728000},   {20, 14, -273150},    {24, 8, 10076160},    {22, 10, -14929920},
      {20, 12, 2593920},   {18, 14, -63900},     {24, 6, -983040},     {22, 8, -1474560},
      {20, 10, 14059520},  {18, 12, -4603904},   {16, 14, 488815},     {24, 4, -62914560},
      {22, 6, 161218560},  {20, 8, -128696320},  {18, 10, 35885056},   {16, 12, -3518208},
      {14, 14, -91800},    {22, 4, -125829120},  {20, 6, 172359680},   {18, 8, -42663936},
      {16, 10, -8330240},  {14, 12, 3914752},    {12, 14, -201956},    {20, 4, -62914560},
      {18, 6, 14417920},   {16, 8, 23478272},    {14, 10, -9973760},   {12, 12, 703744},
      {10, 14, 5480},      {16, 6, -11468800},   {14, 8, 5865472},     {12, 10, 247808},
      {10, 12, -274432},   {8, 14, 34991},       {12, 8, -802816},     {10, 10, 356352},
      {8, 12, -100736},    {6, 14, 9316},        {8, 10, 38400},       {6, 12, -10752},
      {4, 14, 1026},       {4, 12, -384},        {2, 14, 52},          {0, 14, 1},
  });
  return p;
}

inline const BivariatePolynomial& east_pole_polynomial() {
  static const BivariatePolynomial p("PE", {
      {24, 14, 1},         {22, 14, 52},         {22, 12, -384},       {20, 14, 1026},
      {20, 12, -10752},    {18, 14, 9316},       {20, 10, 38400},      {18, 12, -100736},
      {16, 14, 34991},     {18, 10, 356352},     {16, 12, -274432},    {14, 14, 5480},
      {18, 8, -802816},    {16, 10, 247808},     {14, 12, 703744},     {12, 14, -201956},
      {16, 8, 5865472},    {14, 10, -9973760},   {12, 12, 3914752},    {10, 14, -91800},
      {16, 6, -11468800},  {14, 8, 23478272},    {12, 10, -8330240},   {10, 12, -3518208},
      {8, 14, 488815},     {14, 6, 14417920},    {12, 8, -42663936},   {10, 10, 35885056},
      {8, 12, -4603904},   {6, 14, -63900},      {14, 4, -62914560},   {12, 6, 172359680},
      {10, 8, -128696320}, {8, 10, 14059520},    {6, 12, 2593920},     {4, 14, -273150},
      {12, 4, -125829120}, {10, 6, 161218560},   {8, 8, -1474560},     {6, 10, -14929920},
      {4, 12, 1728000},    {2, 14, 40500},       {10, 4, -62914560},   {8, 6, -983040},
      {6, 8, 10076160},    {4, 10, -576000},     {2, 12, -432000},     {0, 14, 50625},
  });
  return p;
}
// clang-format on

struct PolyValue {
  long double value = 0.0L;
  long double error_bound = 0.0L;  // |computed - exact| <= error_bound
};

/// Sum of terms with powers precomputed; the bound is the standard
/// (k + 2n) u sum |c a^i r^j| for k-fold products and n additions.
inline PolyValue evaluate(const BivariatePolynomial& poly, long double a, long double r) {
  std::vector<long double> pa(static_cast<std::size_t>(poly.degree_a()) + 1, 1.0L);
  std::vector<long double> pr(static_cast<std::size_t>(poly.degree_r()) + 1, 1.0L);
  for (std::size_t i = 1; i < pa.size(); ++i) pa[i] = pa[i - 1] * a;
  for (std::size_t j = 1; j < pr.size(); ++j) pr[j] = pr[j - 1] * r;
  long double sum = 0.0L, magnitude = 0.0L;
  for (const Term& t : poly.terms()) {
    const long double term = static_cast<long double>(t.coeff) * pa[t.deg_a] * pr[t.deg_r];
    sum += term;
    magnitude += std::abs(term);
  }
  const long double u = std::numeric_limits<long double>::epsilon();
  const long double steps = poly.degree_a() + poly.degree_r() + 2.0L * poly.terms().size() + 4.0L;
  return {sum, 2.0L * steps * u * magnitude};
}

inline double eval_poly(const BivariatePolynomial& poly, double a, double r) {
  return static_cast<double>(evaluate(poly, a, r).value);
}

/// +1 or -1 when the sign survives the rounding bound, 0 otherwise.
inline int certified_sign(const BivariatePolynomial& poly, long double a, long double r) {
  const PolyValue v = evaluate(poly, a, r);
  if (v.value > v.error_bound) return 1;
  if (v.value < -v.error_bound) return -1;
  return 0;
}

struct TriangleBounds {
  double r1 = 0.0;  // smallest inscribed equilateral triangle
  double r2 = 0.0;  // largest inscribed equilateral triangle
};

inline TriangleBounds triangle_bounds(double a) {
  if (!(a >= 1.0)) fail(ErrorKind::InvalidParameter, "triangle bounds need a >= 1");
  const double k = 4.0 * std::sqrt(3.0);
  return {k * a / (a * a + 3.0), k * a * a / (3.0 * a * a + 1.0)};
}

struct RootInterval {
  double lo = 0.0;
  double hi = 0.0;
  int sign_lo = 0;
  int sign_hi = 0;

  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

struct RootScanOptions {
  double tol = 1e-13;
  int grid_cells = 10000;
};

/// Sign-change roots of poly(a, .) in (r_lo, r_hi], each bracketed by a
/// certified sign change and bisected down to tol. Roots of even multiplicity
/// produce no sign change and are not reported.
inline std::vector<RootInterval> isolate_star_roots(const BivariatePolynomial& poly, double a,
                                                    double r_lo, double r_hi,
                                                    RootScanOptions opt = {}) {
  const double r2 = triangle_bounds(a).r2;
  if (r_lo < r2 * (1.0 - 1e-14)) {
    std::ostringstream os;
    os.precision(17);
    os << "scan must start at or above the triangle bound r2(" << a << ")=" << r2;
    fail(ErrorKind::InvalidParameter, os.str());
  }
  if (!(r_hi > r_lo) || opt.grid_cells < 1 || !(opt.tol > 0.0))
    fail(ErrorKind::InvalidParameter, "root scan needs r_hi > r_lo, grid_cells >= 1, tol > 0");

  std::vector<RootInterval> roots;
  const double h = (r_hi - r_lo) / opt.grid_cells;
  double prev_x = r_lo;
  int prev_sign = certified_sign(poly, a, r_lo);
  for (int k = 1; k <= opt.grid_cells; ++k) {
    const double x = k == opt.grid_cells ? r_hi : r_lo + k * h;
    const int s = certified_sign(poly, a, x);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      RootInterval root{prev_x, x, prev_sign, s};
      while (root.width() > opt.tol) {
        const double mid = root.midpoint();
        if (mid <= root.lo || mid >= root.hi) break;
        const int sm = certified_sign(poly, a, mid);
        if (sm == 0) break;  // below the arithmetic resolution
        if (sm == root.sign_lo)
          root.lo = mid;
        else
          root.hi = mid;
      }
      roots.push_back(root);
    }
    prev_x = x;
    prev_sign = s;
  }
  return roots;
}

struct PoleRootOptions {
  double r_ceiling = 2.2;
  RootScanOptions scan{};
};

/// The unique root of poly(a, .) above r2(a): the pole-based star diameter.
inline RootInterval pole_star_root(const BivariatePolynomial& poly, double a,
                                   PoleRootOptions opt = {}) {
  const double r2 = triangle_bounds(a).r2;
  const auto roots = isolate_star_roots(poly, a, r2, opt.r_ceiling, opt.scan);
  if (roots.size() != 1) {
    std::ostringstream os;
    os.precision(17);
    os << poly.name() << " at a=" << a << " has " << roots.size() << " roots in (r2, "
       << opt.r_ceiling << "], expected 1";
    fail(ErrorKind::RootCountUnexpected, os.str());
  }
  return roots.front();
}

/// D(a) from the elimination polynomials: P_N root minus P_E root.
inline double pole_gap_algebraic(Eccentricity a, PoleRootOptions opt = {}) {
  const double n = pole_star_root(north_pole_polynomial(), a.value(), opt).midpoint();
  const double e = pole_star_root(east_pole_polynomial(), a.value(), opt).midpoint();
  return n - e;
}

// Residuals of the polynomial star system on a computed star: every vertex on
// E_a, consecutive vertices (traversal order) at distance r, and the mirror
// symmetries of pole-based stars.

inline double star_system_residual(const StarConfig& star) {
  const Eccentricity a(star.a);
  const double r2 = star.diameter * star.diameter;
  double worst = 0.0;
  const std::size_t n = star.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint p = embed(star.vertices[i], a);
    const PlanePoint q = embed(star.vertices[(i + 1) % n], a);
    const double on_curve = (p.x / star.a) * (p.x / star.a) + p.y * p.y - 1.0;
    const double side = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y) - r2;
    worst = std::max({worst, std::abs(on_curve), std::abs(side)});
  }
  return worst;
}

namespace detail {

// Residual of the pairing v_i <-> v_{n-i} under a reflection with signs
// (sx, sy), plus the base vertex pinned at `pole`.
inline double mirror_residual(const StarConfig& star, double sx, double sy, PlanePoint pole) {
  const Eccentricity a(star.a);
  const std::size_t n = star.vertices.size();
  const PlanePoint v0 = embed(star.vertices[0], a);
  double worst = std::max(std::abs(v0.x - pole.x), std::abs(v0.y - pole.y));
  for (std::size_t i = 1; i < n; ++i) {
    const PlanePoint p = embed(star.vertices[i], a);
    const PlanePoint q = embed(star.vertices[n - i], a);
    worst = std::max({worst, std::abs(p.x - sx * q.x), std::abs(p.y - sy * q.y)});
  }
  return worst;
}

}  // namespace detail

/// x0 = 0, y0 = 1, and v_i mirrors v_{n-i} across the y-axis.
inline double north_symmetry_residual(const StarConfig& star) {
  return detail::mirror_residual(star, -1.0, 1.0, {0.0, 1.0});
}

/// x0 = a, y0 = 0, and v_i mirrors v_{n-i} across the x-axis.
inline double east_symmetry_residual(const StarConfig& star) {
  return detail::mirror_residual(star, 1.0, -1.0, {star.a, 0.0});
}

}  // namespace evr
