#pragma once

// Shared helpers for the unit tests: seeded random inputs and brute-force
// oracles that do not go through the library's own algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "dioph/rational.hpp"

namespace testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline dioph::Rational random_rational(std::mt19937_64& g, int num_lo, int num_hi, int den_hi) {
  dioph::Rational r(uniform(g, num_lo, num_hi), uniform(g, 1, den_hi));
  r.canonicalize();
  return r;
}

/// All exponent tuples of length `len` with entries in [0, side].
inline std::vector<std::vector<std::uint32_t>> box(std::size_t len, std::uint32_t side) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> b(len, 0);
  while (true) {
    out.push_back(b);
    std::size_t i = 0;
    while (i < len && b[i] == side) b[i++] = 0;
    if (i == len) break;
    ++b[i];
  }
  return out;
}

/// All exponent tuples of length `len` with total degree `degree`.
inline std::vector<std::vector<std::uint32_t>> monomials(std::size_t len, std::uint32_t degree) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& b : box(len, degree)) {
    std::uint32_t s = 0;
    for (auto v : b) s += v;
    if (s == degree) out.push_back(b);
  }
  return out;
}

}  // namespace testing
