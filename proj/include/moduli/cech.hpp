#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moduli/matrix.hpp"
#include "moduli/numeric.hpp"
#include "moduli/smith.hpp"

namespace moduli::cech {

/// Overlap of opens, written as a strictly increasing index tuple.
using Simplex = std::vector<int>;

/// Nerve of a finite open cover: for each n, the (n+1)-fold overlaps
/// that are nonempty. Closed under faces by construction; every open
/// appears as a 0-simplex.
class CoverNerve {
public:
  CoverNerve(std::vector<std::string> opens, const std::vector<Simplex>& simplices)
      : opens_(std::move(opens)) {
    const int n = static_cast<int>(opens_.size());
    if (n == 0) throw input_error("cover needs at least one open");
    std::set<Simplex> closed;
    for (int i = 0; i < n; ++i) closed.insert({i});
    for (Simplex s : simplices) {
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw input_error("simplex with a repeated open");
      for (int idx : s)
        if (idx < 0 || idx >= n) throw input_error("simplex index out of range");
      close_faces(s, closed);
    }
    for (const Simplex& s : closed) {
      const std::size_t d = s.size() - 1;
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      by_dim_[d].push_back(s);
    }
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
      std::sort(by_dim_[d].begin(), by_dim_[d].end());
      for (std::size_t k = 0; k < by_dim_[d].size(); ++k) index_[by_dim_[d][k]] = k;
    }
  }

  /// Nerve of a cover where every collection of opens overlaps.
  static CoverNerve full(int n_opens) {
    std::vector<int> all(static_cast<std::size_t>(n_opens));
    for (int i = 0; i < n_opens; ++i) all[static_cast<std::size_t>(i)] = i;
    return CoverNerve(default_labels(n_opens), {all});
  }

  /// All overlaps except the total one; for four opens this is the
  /// boundary of a tetrahedron, a combinatorial 2-sphere.
  static CoverNerve boundary(int n_opens) {
    if (n_opens < 2) throw input_error("boundary nerve needs at least two opens");
    std::vector<Simplex> faces;
    for (int omit = 0; omit < n_opens; ++omit) {
      Simplex s;
      for (int i = 0; i < n_opens; ++i)
        if (i != omit) s.push_back(i);
      faces.push_back(s);
    }
    return CoverNerve(default_labels(n_opens), faces);
  }

  std::size_t open_count() const { return opens_.size(); }
  const std::vector<std::string>& opens() const { return opens_; }

  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<Simplex>& simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim > max_dim()) return none;
    return by_dim_[static_cast<std::size_t>(dim)];
  }

  bool has(const Simplex& s) const { return index_.count(s) != 0; }

  std::size_t index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw input_error("simplex not in the nerve");
    return it->second;
  }

private:
  static std::vector<std::string> default_labels(int n) {
    if (n < 1) throw input_error("cover needs at least one open");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("U" + std::to_string(i));
    return labels;
  }

  static void close_faces(const Simplex& s, std::set<Simplex>& out) {
    if (s.empty()) return;
    if (!out.insert(s).second) return;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      close_faces(face, out);
    }
  }

  std::vector<std::string> opens_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

// Coefficient groups. Each one fixes an element type, exact group laws,
// and a canonical form (only Q(i)/Z actually reduces anything).

struct IntegerGroup {
  using Element = Int;
  static const char* name() { return "Z"; }
  static Element zero() { return 0; }
  static Element add(const Element& a, const Element& b) { return a + b; }
  static Element neg(const Element& a) { return -a; }
  static Element canonical(Element a) { return a; }
  static bool eq(const Element& a, const Element& b) { return a == b; }
};

struct GaussianGroup {
  using Element = GaussianRat;
  static const char* name() { return "Q(i)"; }
  static Element zero() { return {}; }
  static Element add(const Element& a, const Element& b) { return a + b; }
  static Element neg(const Element& a) { return -a; }
  static Element canonical(Element a) { return a; }
  static bool eq(const Element& a, const Element& b) { return a == b; }
};

/// Q(i) mod Z, the exact stand-in for the multiplicative group via
/// z -> exp(2 pi i z); the kernel is the (real) integers, so canonical
/// form reduces the real part into [0,1) and keeps the imaginary part.
struct ModZGroup {
  using Element = GaussianRat;
  static const char* name() { return "Q(i)/Z"; }
  static Element zero() { return {}; }
  static Element add(const Element& a, const Element& b) { return canonical(a + b); }
  static Element neg(const Element& a) { return canonical(-a); }
  static Element canonical(Element a) {
    a.re -= Rat(rat_floor(a.re));
    return a;
  }
  static bool eq(const Element& a, const Element& b) { return canonical(a) == canonical(b); }
};

template <class A, class B>
struct ProductGroup {
  using Element = std::pair<typename A::Element, typename B::Element>;
  static const char* name() { return "product"; }
  static Element zero() { return {A::zero(), B::zero()}; }
  static Element add(const Element& a, const Element& b) {
    return {A::add(a.first, b.first), B::add(a.second, b.second)};
  }
  static Element neg(const Element& a) { return {A::neg(a.first), B::neg(a.second)}; }
  static Element canonical(Element a) {
    return {A::canonical(a.first), B::canonical(a.second)};
  }
  static bool eq(const Element& a, const Element& b) {
    return A::eq(a.first, b.first) && B::eq(a.second, b.second);
  }
};

/// Degree-n assignment of group elements to the n-fold overlaps.
template <class G>
struct Cochain {
  int degree = 0;
  std::map<Simplex, typename G::Element> values;

  typename G::Element at(const Simplex& s) const {
    auto it = values.find(s);
    if (it == values.end()) throw input_error("cochain missing a simplex value");
    return it->second;
  }
};

template <class G>
Cochain<G> zero_cochain(const CoverNerve& nerve, int degree) {
  Cochain<G> c;
  c.degree = degree;
  for (const Simplex& s : nerve.simplices(degree)) c.values[s] = G::zero();
  return c;
}

template <class G>
void validate_cochain(const CoverNerve& nerve, const Cochain<G>& c) {
  const auto& simplices = nerve.simplices(c.degree);
  if (c.values.size() != simplices.size())
    throw input_error("cochain does not cover the degree-" + std::to_string(c.degree) +
                      " simplices");
  for (const Simplex& s : simplices)
    if (c.values.find(s) == c.values.end())
      throw input_error("cochain missing a simplex value");
}

template <class G>
bool is_zero(const Cochain<G>& c) {
  for (const auto& [s, v] : c.values)
    if (!G::eq(v, G::zero())) return false;
  return true;
}

template <class G>
bool equal(const Cochain<G>& a, const Cochain<G>& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) return false;
  for (const auto& [s, v] : a.values) {
    auto it = b.values.find(s);
    if (it == b.values.end() || !G::eq(v, it->second)) return false;
  }
  return true;
}

template <class G>
Cochain<G> add(const Cochain<G>& a, const Cochain<G>& b) {
  if (a.degree != b.degree) throw input_error("cochain sum needs equal degrees");
  Cochain<G> out;
  out.degree = a.degree;
  for (const auto& [s, v] : a.values) out.values[s] = G::add(v, b.at(s));
  return out;
}

template <class G>
Cochain<G> negate(const Cochain<G>& a) {
  Cochain<G> out;
  out.degree = a.degree;
  for (const auto& [s, v] : a.values) out.values[s] = G::neg(v);
  return out;
}

template <class G>
Cochain<G> subtract(const Cochain<G>& a, const Cochain<G>& b) {
  return add(a, negate(b));
}

/// Alternating-sum Cech differential (delta c)(s) = sum_k (-1)^k c(d_k s).
template <class G>
Cochain<G> coboundary(const CoverNerve& nerve, const Cochain<G>& c) {
  validate_cochain(nerve, c);
  Cochain<G> out;
  out.degree = c.degree + 1;
  for (const Simplex& s : nerve.simplices(c.degree + 1)) {
    typename G::Element v = G::zero();
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      v = (k % 2 == 0) ? G::add(v, c.at(face)) : G::add(v, G::neg(c.at(face)));
    }
    out.values[s] = G::canonical(v);
  }
  return out;
}

template <class G>
bool is_cocycle(const CoverNerve& nerve, const Cochain<G>& c) {
  return is_zero(coboundary(nerve, c));
}

/// Matrix of delta : C^{degree-1} -> C^{degree} (entries 0, +-1).
inline Mat<Int> coboundary_matrix(const CoverNerve& nerve, int degree) {
  const auto& rows = nerve.simplices(degree);
  const auto& cols = nerve.simplices(degree - 1);
  Mat<Int> d(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& s = rows[r];
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      d(r, nerve.index_of(face)) += (k % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

namespace detail {

template <class G>
Cochain<G> cochain_from_column(const CoverNerve& nerve, int degree,
                               const std::vector<typename G::Element>& column) {
  Cochain<G> c;
  c.degree = degree;
  const auto& simplices = nerve.simplices(degree);
  for (std::size_t k = 0; k < simplices.size(); ++k)
    c.values[simplices[k]] = G::canonical(column[k]);
  return c;
}

}  // namespace detail

/// Exact coboundary test over Z: solves the integer linear system via
/// the Smith form; a witness b with delta b = c, or nullopt.
inline std::optional<Cochain<IntegerGroup>> is_coboundary(const CoverNerve& nerve,
                                                          const Cochain<IntegerGroup>& c) {
  validate_cochain(nerve, c);
  if (c.degree == 0) {
    if (is_zero(c)) return zero_cochain<IntegerGroup>(nerve, -1);
    return std::nullopt;
  }
  Mat<Int> d = coboundary_matrix(nerve, c.degree);
  std::vector<Int> rhs;
  for (const Simplex& s : nerve.simplices(c.degree)) rhs.push_back(c.at(s));
  auto x = integer_solve(d, rhs);
  if (!x) return std::nullopt;
  return detail::cochain_from_column<IntegerGroup>(nerve, c.degree - 1, *x);
}

/// Exact coboundary test over Q(i), componentwise on the real and
/// imaginary parts.
inline std::optional<Cochain<GaussianGroup>> is_coboundary(const CoverNerve& nerve,
                                                           const Cochain<GaussianGroup>& c) {
  validate_cochain(nerve, c);
  if (c.degree == 0) {
    if (is_zero(c)) return zero_cochain<GaussianGroup>(nerve, -1);
    return std::nullopt;
  }
  Mat<Rat> d = matrix_cast<Rat>(coboundary_matrix(nerve, c.degree));
  std::vector<Rat> re, im;
  for (const Simplex& s : nerve.simplices(c.degree)) {
    re.push_back(c.at(s).re);
    im.push_back(c.at(s).im);
  }
  auto xr = field_solve(d, re);
  auto xi = field_solve(d, im);
  if (!xr || !xi) return std::nullopt;
  std::vector<GaussianRat> col(xr->size());
  for (std::size_t k = 0; k < col.size(); ++k) col[k] = GaussianRat((*xr)[k], (*xi)[k]);
  return detail::cochain_from_column<GaussianGroup>(nerve, c.degree - 1, col);
}

/// Exact coboundary test mod Z. Writing delta(lift psi) = lift(c) + k
/// with k an integer slack cochain, the real part is solvable for some
/// integer k iff the slack system N k = -N re(c) has an integer point,
/// where N spans the left null space of delta. That lattice question is
/// decided by the Smith form, so the verdict is always definitive.
inline std::optional<Cochain<ModZGroup>> is_coboundary(const CoverNerve& nerve,
                                                       const Cochain<ModZGroup>& c) {
  validate_cochain(nerve, c);
  if (c.degree == 0) {
    if (is_zero(c)) return zero_cochain<ModZGroup>(nerve, -1);
    return std::nullopt;
  }
  const auto& simplices = nerve.simplices(c.degree);
  const std::size_t m = simplices.size();
  Mat<Int> d_int = coboundary_matrix(nerve, c.degree);
  Mat<Rat> d = matrix_cast<Rat>(d_int);
  std::vector<Rat> re(m), im(m);
  for (std::size_t k = 0; k < m; ++k) {
    GaussianRat v = ModZGroup::canonical(c.at(simplices[k]));
    re[k] = v.re;
    im[k] = v.im;
  }
  // imaginary part carries no slack: it must already be consistent
  auto xi = field_solve(d, im);
  if (!xi) return std::nullopt;

  Mat<Rat> null = left_nullspace(d);
  std::vector<Rat> target(null.rows(), Rat(0));
  for (std::size_t i = 0; i < null.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) target[i] -= null(i, j) * re[j];
  // clear denominators row by row to get an integer system in k
  Mat<Int> a(null.rows(), m);
  std::vector<Int> b(null.rows());
  for (std::size_t i = 0; i < null.rows(); ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < m; ++j) scale = lcm(scale, denominator(null(i, j)));
    scale = lcm(scale, denominator(target[i]));
    for (std::size_t j = 0; j < m; ++j) {
      Rat v = null(i, j) * scale;
      a(i, j) = numerator(v);
    }
    Rat tb = target[i] * scale;
    b[i] = numerator(tb);
  }
  auto slack = integer_solve(a, b);
  if (!slack) return std::nullopt;
  std::vector<Rat> shifted(m);
  for (std::size_t k = 0; k < m; ++k) shifted[k] = re[k] + Rat((*slack)[k]);
  auto xr = field_solve(d, shifted);
  if (!xr) return std::nullopt;  // unreachable: consistency was certified
  std::vector<GaussianRat> col(xr->size());
  for (std::size_t k = 0; k < col.size(); ++k) col[k] = GaussianRat((*xr)[k], (*xi)[k]);
  return detail::cochain_from_column<ModZGroup>(nerve, c.degree - 1, col);
}

/// Connecting map of 0 -> Z -> Q(i) -> Q(i)/Z -> 0: lift the cocycle,
/// apply delta, land in integer values. The class is independent of the
/// lift (two lifts differ by an integer cochain).
inline Cochain<IntegerGroup> bockstein(const CoverNerve& nerve, const Cochain<ModZGroup>& c) {
  validate_cochain(nerve, c);
  if (!is_cocycle(nerve, c)) throw input_error("bockstein needs a cocycle");
  Cochain<GaussianGroup> lift;
  lift.degree = c.degree;
  for (const auto& [s, v] : c.values) lift.values[s] = ModZGroup::canonical(v);
  Cochain<GaussianGroup> delta = coboundary(nerve, lift);
  Cochain<IntegerGroup> out;
  out.degree = delta.degree;
  for (const auto& [s, v] : delta.values) {
    if (v.im != 0 || !is_integer(v.re))
      throw input_error("bockstein lift did not land in integers");  // cocycle guarantees it does
    out.values[s] = numerator(v.re);
  }
  return out;
}

/// The 2-cocycle from choosing scalar trivializations of overlap line
/// bundles: beta = delta(scalars). The class-level data must satisfy
/// delta(classes) = 0, i.e. the triple tensor products are trivial.
/// Regauging the scalars by a 1-cochain moves beta by a coboundary.
template <class A>
Cochain<ModZGroup> gerbe_from_trivializations(const CoverNerve& nerve, const Cochain<A>& classes,
                                              const Cochain<ModZGroup>& scalars) {
  validate_cochain(nerve, classes);
  validate_cochain(nerve, scalars);
  if (classes.degree != 1 || scalars.degree != 1)
    throw input_error("gerbe construction expects degree-1 data");
  if (!is_cocycle(nerve, classes)) throw input_error("triple tensor not trivializable");
  return coboundary(nerve, scalars);
}

/// Twisted gluing: the triple compositions of psi must give exactly the
/// gerbe cocycle, i.e. delta(psi) = beta.
inline bool twisted_glue_check(const CoverNerve& nerve, const Cochain<ModZGroup>& psi,
                               const Cochain<ModZGroup>& beta) {
  validate_cochain(nerve, psi);
  validate_cochain(nerve, beta);
  if (!is_cocycle(nerve, beta)) throw input_error("gerbe datum must be a cocycle");
  return equal(coboundary(nerve, psi), beta);
}

/// One-parameter family of gerbes beta_t = exp(t * kappa): reduce the
/// scaled rational cocycle mod Z. Additive in t, trivial at t = 0, and
/// trivial at t = 1 when kappa is integral.
inline Cochain<ModZGroup> torsor_path(const CoverNerve& nerve, const Cochain<GaussianGroup>& kappa,
                                      const Rat& t) {
  validate_cochain(nerve, kappa);
  if (!is_cocycle(nerve, kappa)) throw input_error("torsor path needs a cocycle");
  Cochain<ModZGroup> out;
  out.degree = kappa.degree;
  for (const auto& [s, v] : kappa.values)
    out.values[s] = ModZGroup::canonical(GaussianRat(t * v.re, t * v.im));
  return out;
}

/// Betti-style description of H^n(nerve; G) for G = Z or Q(i).
struct CohomologyRank {
  Int free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1 (Z coefficients only)
};

inline CohomologyRank nerve_cohomology_z(const CoverNerve& nerve, int degree) {
  if (degree < 0) throw input_error("cohomology degree must be >= 0");
  const Int n = static_cast<Int>(nerve.simplices(degree).size());
  Mat<Int> d_out = coboundary_matrix(nerve, degree + 1);
  Int rank_out = static_cast<Int>(smith_form(d_out).rank);
  CohomologyRank h;
  if (degree == 0) {
    h.free_rank = n - rank_out;
    return h;
  }
  SmithForm below = smith_form(coboundary_matrix(nerve, degree));
  h.free_rank = n - rank_out - static_cast<Int>(below.rank);
  for (const Int& d : below.elementary_divisors())
    if (d > 1) h.torsion.push_back(d);
  return h;
}

inline CohomologyRank nerve_cohomology_q(const CoverNerve& nerve, int degree) {
  if (degree < 0) throw input_error("cohomology degree must be >= 0");
  const Int n = static_cast<Int>(nerve.simplices(degree).size());
  Int rank_out = static_cast<Int>(field_rank(matrix_cast<Rat>(coboundary_matrix(nerve, degree + 1))));
  CohomologyRank h;
  if (degree == 0) {
    h.free_rank = n - rank_out;
    return h;
  }
  Int rank_in = static_cast<Int>(field_rank(matrix_cast<Rat>(coboundary_matrix(nerve, degree))));
  h.free_rank = n - rank_out - rank_in;
  return h;
}

}  // namespace moduli::cech
