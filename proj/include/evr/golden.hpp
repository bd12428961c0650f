#pragma once

#include <cmath>

namespace evr {

struct ScalarExtremum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of f on [lo, hi]. Assumes f is
/// unimodal on the bracket; otherwise converges to some local minimum.
template <class F>
ScalarExtremum golden_minimize(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? ScalarExtremum{x1, f1} : ScalarExtremum{x2, f2};
}

template <class F>
ScalarExtremum golden_maximize(F&& f, double lo, double hi, double tol) {
  ScalarExtremum e = golden_minimize([&](double x) { return -f(x); }, lo, hi, tol);
  e.value = -e.value;
  return e;
}

}  // namespace evr
