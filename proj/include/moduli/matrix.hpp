#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "moduli/numeric.hpp"

namespace moduli {

/// Dense row-major matrix over an exact scalar (Int, Rat, GaussianRat).
/// These are desk-scale matrices (ranks rarely above a dozen); clarity
/// over cleverness throughout.
template <class T>
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw input_error("ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw input_error("matrix-vector shape mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = y[i] + a(i, j) * x[j];
  return y;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw input_error("dot product length mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(Mat<Int> m) {
  if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Row echelon rank over a field scalar (Rat or GaussianRat).
template <class F>
std::size_t field_rank(Mat<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == F(0)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == F(0)) continue;
      F f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves A x = b over a field; nullopt when inconsistent. Free variables
/// are set to zero.
template <class F>
std::optional<std::vector<F>> field_solve(Mat<F> a, std::vector<F> b) {
  if (a.rows() != b.size()) throw input_error("solve shape mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == F(0)) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    std::swap(b[r], b[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == F(0)) continue;
      F f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!(b[i] == F(0))) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k] / a(k, pivot_col[k]);
  return x;
}

/// Basis of the left null space {y : y A = 0} over a field, as rows.
template <class F>
Mat<F> left_nullspace(const Mat<F>& a) {
  // Row-reduce [A | I]; the I-part of every row whose A-part vanished is
  // a left annihilator, and together they form a basis.
  const std::size_t rows = a.rows(), cols = a.cols();
  Mat<F> aug(rows, cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols + i) = F(1);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug(p, c) == F(0)) ++p;
    if (p == rows) continue;
    aug.swap_rows(r, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug(i, c) == F(0)) continue;
      F f = aug(i, c) / aug(r, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) = aug(i, j) - f * aug(r, j);
    }
    ++r;
  }
  Mat<F> null(rows - r, rows);
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) null(i - r, j) = aug(i, cols + j);
  return null;
}

template <class To, class From>
Mat<To> matrix_cast(const Mat<From>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

}  // namespace moduli
