#pragma once

// Deterministic generators for the property-style tests.

#include <random>
#include <vector>

#include "moduli/lattice.hpp"
#include "moduli/matrix.hpp"

namespace testgen {

using moduli::Int;
using moduli::Mat;
using moduli::Rat;

inline Int random_int(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> d(-span, span);
  return d(rng);
}

inline std::vector<Int> random_vector(std::mt19937_64& rng, std::size_t n, int span = 5) {
  std::vector<Int> v(n);
  for (auto& x : v) x = random_int(rng, span);
  return v;
}

inline Mat<Int> random_symmetric(std::mt19937_64& rng, std::size_t n, int span = 4) {
  Mat<Int> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Int v = random_int(rng, span);
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

/// Product of random elementary matrices: shears, swaps, sign flips.
inline Mat<Int> random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
  Mat<Int> u = Mat<Int>::identity(n);
  if (n < 1) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> shear(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0:
      case 1: {
        if (i == j) break;
        Int f = shear(rng);
        for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
        break;
      }
      case 2:
        u.swap_rows(i, j);
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
    }
  }
  return u;
}

inline Rat random_rat(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rat(num(rng), den(rng));
}

}  // namespace testgen
