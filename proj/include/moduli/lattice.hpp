#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/matrix.hpp"
#include "moduli/numeric.hpp"
#include "moduli/smith.hpp"

namespace moduli::lattice {

using Vec = std::vector<Int>;

/// Free finite-rank lattice with an integer symmetric bilinear form.
class BilinearLattice {
public:
  BilinearLattice() = default;  // the rank-zero lattice
  explicit BilinearLattice(Mat<Int> gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw input_error("Gram matrix must be symmetric");
  }

  std::size_t rank() const { return gram_.rows(); }
  const Mat<Int>& gram() const { return gram_; }

private:
  Mat<Int> gram_;
};

inline void check_vector(const BilinearLattice& l, const Vec& x) {
  if (x.size() != l.rank()) throw input_error("vector length does not match lattice rank");
}

/// x^T * gram * y.
inline Int pair(const BilinearLattice& l, const Vec& x, const Vec& y) {
  check_vector(l, x);
  check_vector(l, y);
  return dot(x, l.gram() * y);
}

/// Basis of a saturated sublattice of an ambient lattice.
struct SublatticeBasis {
  std::vector<Vec> vectors;

  std::size_t rank() const { return vectors.size(); }
  std::size_t ambient_rank() const { return vectors.empty() ? 0 : vectors.front().size(); }

  /// Columns are the basis vectors.
  Mat<Int> as_columns() const {
    Mat<Int> m(ambient_rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = vectors[j][i];
    return m;
  }

  /// Integer coordinates of x in this basis, if x lies in the spanned
  /// sublattice.
  std::optional<Vec> coordinates_of(const Vec& x) const {
    if (vectors.empty()) return std::nullopt;
    if (x.size() != ambient_rank()) throw input_error("membership query length mismatch");
    return integer_solve(as_columns(), x);
  }

  bool contains(const Vec& x) const { return coordinates_of(x).has_value(); }
};

/// Saturated orthogonal complement {x : pair(L, x, v) = 0 for all v in vs},
/// via the integer kernel of the pairing map. The kernel comes from the
/// Smith form's unimodular column transform, so saturation is built in
/// rather than patched up afterwards.
inline SublatticeBasis orthogonal_complement(const BilinearLattice& l, const std::vector<Vec>& vs) {
  const std::size_t n = l.rank();
  Mat<Int> pairing(vs.size(), n);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    check_vector(l, vs[k]);
    Vec gv = l.gram() * vs[k];
    for (std::size_t j = 0; j < n; ++j) pairing(k, j) = gv[j];
  }
  Mat<Int> kernel = integer_kernel(pairing);
  SublatticeBasis basis;
  basis.vectors.reserve(kernel.cols());
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = kernel(i, j);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

/// Gram matrix of the basis vectors under the ambient form.
inline BilinearLattice gram_of(const BilinearLattice& l, const SublatticeBasis& b) {
  const std::size_t k = b.rank();
  Mat<Int> g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Int p = pair(l, b.vectors[i], b.vectors[j]);
      g(i, j) = p;
      g(j, i) = p;
    }
  return BilinearLattice(std::move(g));
}

inline Int determinant(const BilinearLattice& l) { return det(l.gram()); }

inline bool is_unimodular(const BilinearLattice& l) { return abs(determinant(l)) == 1; }

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of the form, by exact rational congruence diagonalization.
inline Signature signature(const BilinearLattice& l) {
  const std::size_t n = l.rank();
  Mat<Rat> m = matrix_cast<Rat>(l.gram());
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // all remaining diagonal entries vanish; manufacture one if the
      // block is nonzero, otherwise the rest is radical
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.null += n - k;
        return sig;
      }
      for (std::size_t j = 0; j < n; ++j) m(oi, j) += m(oj, j);
      for (std::size_t i = 0; i < n; ++i) m(i, oi) += m(i, oj);
      piv = oi;
    }
    if (piv != k) {
      m.swap_rows(k, piv);
      m.swap_cols(k, piv);
    }
    const Rat p = m(k, k);
    (p > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / p;
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
    }
  }
  return sig;
}

/// A form is even iff every diagonal entry is even; used only as a
/// distinguishing invariant, never as evidence of congruence.
inline bool is_even(const BilinearLattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) % 2 != 0) return false;
  return true;
}

enum class CongruenceVerdict { Yes, No, Inconclusive };

struct CongruenceResult {
  CongruenceVerdict verdict = CongruenceVerdict::Inconclusive;
  std::optional<Mat<Int>> witness;  // U with det +-1 and U^T G1 U = G2
  std::string invariant;            // set on No: determinant | signature | parity
};

namespace detail {

inline bool congruence_witness_ok(const Mat<Int>& g1, const Mat<Int>& g2, const Mat<Int>& u) {
  if (abs(det(u)) != 1) return false;
  return u.transposed() * g1 * u == g2;
}

// Depth-first column construction of U with partial Gram pruning.
inline bool congruence_search(const Mat<Int>& g1, const Mat<Int>& g2, Int bound,
                              std::vector<Vec>& cols, std::vector<Vec>& g1_cols) {
  const std::size_t n = g1.rows();
  const std::size_t c = cols.size();
  if (c == n) {
    Mat<Int> u(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
    return abs(det(u)) == 1;
  }
  Vec cand(n, -bound);
  for (;;) {
    Vec g1c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g1c[i] += g1(i, j) * cand[j];
    bool ok = dot(cand, g1c) == g2(c, c);
    for (std::size_t i = 0; ok && i < c; ++i) ok = dot(cols[i], g1c) == g2(i, c);
    if (ok) {
      cols.push_back(cand);
      g1_cols.push_back(g1c);
      if (congruence_search(g1, g2, bound, cols, g1_cols)) return true;
      cols.pop_back();
      g1_cols.pop_back();
    }
    std::size_t k = n;
    while (k-- > 0) {
      if (cand[k] < bound) {
        ++cand[k];
        break;
      }
      cand[k] = -bound;
      if (k == 0) return false;
    }
  }
}

}  // namespace detail

/// Decides integral congruence of two symmetric forms by invariants plus
/// bounded exhaustive search over change-of-basis matrices with entries in
/// [-entry_bound, entry_bound]. Invariant mismatches give a definitive No;
/// an exhausted search is Inconclusive, never a No.
inline CongruenceResult congruent(const BilinearLattice& l1, const BilinearLattice& l2,
                                  int entry_bound) {
  if (l1.rank() != l2.rank()) throw input_error("congruence requires equal ranks");
  if (entry_bound < 1) throw input_error("entry_bound must be positive");
  CongruenceResult res;
  if (determinant(l1) != determinant(l2)) {
    res.verdict = CongruenceVerdict::No;
    res.invariant = "determinant";
    return res;
  }
  if (!(signature(l1) == signature(l2))) {
    res.verdict = CongruenceVerdict::No;
    res.invariant = "signature";
    return res;
  }
  if (is_even(l1) != is_even(l2)) {
    res.verdict = CongruenceVerdict::No;
    res.invariant = "parity";
    return res;
  }
  const std::size_t n = l1.rank();
  Mat<Int> id = Mat<Int>::identity(n);
  if (detail::congruence_witness_ok(l1.gram(), l2.gram(), id)) {
    res.verdict = CongruenceVerdict::Yes;
    res.witness = id;
    return res;
  }
  std::vector<Vec> cols, g1_cols;
  if (detail::congruence_search(l1.gram(), l2.gram(), entry_bound, cols, g1_cols)) {
    Mat<Int> u(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
    res.verdict = CongruenceVerdict::Yes;
    res.witness = u;
    return res;
  }
  res.verdict = CongruenceVerdict::Inconclusive;
  return res;
}

}  // namespace moduli::lattice
