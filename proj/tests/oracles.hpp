#pragma once

// Independent oracles the tests check the library against. These stay
// deliberately naive and share no code with the implementation.

#include <array>
#include <cstddef>

#include "moduli/numeric.hpp"

namespace oracle {

/// Euler characteristic of P^1 x P^1 with {0} x P^1 glued to {inf} x P^1
/// and P^1 x {0} glued to P^1 x {inf}, by brute-force cell counting.
/// Cells of P^1: {0}, C^*, {inf} with chi 1, 0, 1; the product has nine
/// cells and the identifications are unions of whole cells, so chi of
/// the quotient is the chi-sum over cell classes.
inline moduli::Int type4_euler_by_cells() {
  // cell (a,b), a,b in {0: zero, 1: cstar, 2: infinity} -> index 3a+b
  std::array<int, 9> parent;
  for (int i = 0; i < 9; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int b = 0; b < 3; ++b) unite(0 * 3 + b, 2 * 3 + b);  // first ruling glued
  for (int a = 0; a < 3; ++a) unite(a * 3 + 0, a * 3 + 2);  // second ruling glued
  moduli::Int chi = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int id = 3 * a + b;
      if (find(id) != id) continue;  // one representative per glued class
      chi += (a == 1 ? 0 : 1) * (b == 1 ? 0 : 1);
    }
  return chi;
}

}  // namespace oracle
