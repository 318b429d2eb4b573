#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "moduli/matrix.hpp"
#include "moduli/numeric.hpp"

namespace moduli {

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... Invariant throughout the reduction: U*A0*V equals the
/// working matrix, so kernels and solution sets can be read off exactly.
struct SmithForm {
  Mat<Int> d;
  Mat<Int> u;  // rows() x rows() of the input
  Mat<Int> v;  // cols() x cols() of the input
  std::size_t rank = 0;

  std::vector<Int> elementary_divisors() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

inline void add_row(Mat<Int>& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
inline void add_col(Mat<Int>& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
inline void negate_row(Mat<Int>& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace detail

inline SmithForm smith_form(const Mat<Int>& a) {
  SmithForm s;
  s.d = a;
  s.u = Mat<Int>::identity(a.rows());
  s.v = Mat<Int>::identity(a.cols());
  Mat<Int>& d = s.d;
  Mat<Int>& u = s.u;
  Mat<Int>& v = s.v;

  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    // find a nonzero pivot in the trailing block, smallest |entry| first
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        Int mag = abs(d(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    if (pi != t) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }

    // clear row and column t; restart if a division leaves a remainder
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        detail::add_row(d, i, t, -q);
        detail::add_row(u, i, t, -q);
        if (d(i, t) != 0) {  // remainder is strictly smaller: swap it up
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        detail::add_col(d, j, t, -q);
        detail::add_col(v, j, t, -q);
        if (d(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
    }
    if (d(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
  }
  s.rank = t;

  // enforce the divisibility chain d_i | d_{i+1}
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      if (d(i + 1, i + 1) % d(i, i) == 0) continue;
      changed = true;
      // fold entry (i+1,i+1) into column i, then re-clear the 2x2 block
      detail::add_col(d, i, i + 1, 1);
      detail::add_col(v, i, i + 1, 1);
      for (bool clean = false; !clean;) {
        clean = true;
        if (d(i + 1, i) != 0) {
          if (abs(d(i + 1, i)) < abs(d(i, i)) || d(i, i) == 0) {
            d.swap_rows(i, i + 1);
            u.swap_rows(i, i + 1);
          }
          Int q = d(i + 1, i) / d(i, i);
          detail::add_row(d, i + 1, i, -q);
          detail::add_row(u, i + 1, i, -q);
          if (d(i + 1, i) != 0) clean = false;
        }
        if (d(i, i + 1) != 0) {
          Int q = d(i, i + 1) / d(i, i);
          detail::add_col(d, i + 1, i, -q);
          detail::add_col(v, i + 1, i, -q);
          if (d(i, i + 1) != 0) {
            d.swap_cols(i, i + 1);
            v.swap_cols(i, i + 1);
            clean = false;
          }
        }
      }
      if (d(i, i) < 0) {
        detail::negate_row(d, i);
        detail::negate_row(u, i);
      }
      if (d(i + 1, i + 1) < 0) {
        detail::negate_row(d, i + 1);
        detail::negate_row(u, i + 1);
      }
    }
  }
  return s;
}

/// Basis of the saturated kernel {x in Z^n : A x = 0}, as columns of an
/// n x (n - rank) matrix. Columns of V beyond the rank span it because V
/// is unimodular, so the basis is automatically primitive.
inline Mat<Int> integer_kernel(const Mat<Int>& a) {
  SmithForm s = smith_form(a);
  const std::size_t n = a.cols();
  Mat<Int> k(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.v(i, j);
  return k;
}

/// One integer solution of A x = b, if any.
inline std::optional<std::vector<Int>> integer_solve(const Mat<Int>& a, const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw input_error("integer_solve shape mismatch");
  SmithForm s = smith_form(a);
  std::vector<Int> ub = s.u * b;
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

}  // namespace moduli
