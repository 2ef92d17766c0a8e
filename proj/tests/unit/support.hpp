#pragma once

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

namespace test {

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  double gauss() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
  std::mt19937_64 gen;
};

}  // namespace test
