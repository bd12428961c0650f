#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "evr/evr.hpp"

#define EXPECT_EVR_ERROR(stmt, expected_kind)                                      \
  do {                                                                            \
    try {                                                                         \
      stmt;                                                                       \
      ADD_FAILURE() << "expected " << evr::to_string(expected_kind);              \
    } catch (const evr::Error& e) {                                               \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                             \
    }                                                                             \
  } while (0)

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// Plane distance computed from coordinates, independent of the library's
// half-angle chord formula.
inline double plane_distance(double t1, double t2, double a) {
  return std::hypot(a * std::cos(t1) - a * std::cos(t2), std::sin(t1) - std::sin(t2));
}

}  // namespace testing_support
