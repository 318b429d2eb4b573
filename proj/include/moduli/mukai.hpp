#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/lattice.hpp"
#include "moduli/matrix.hpp"
#include "moduli/numeric.hpp"

namespace moduli::mukai {

using lattice::BilinearLattice;
using lattice::SublatticeBasis;
using lattice::Vec;

/// K3 surface carrying a prescribed Neron-Severi lattice. The NS form of
/// a K3 is even of hyperbolic signature (1, rank-1); both are validated
/// on construction.
class K3Surface {
public:
  explicit K3Surface(BilinearLattice ns, std::vector<std::string> labels = {})
      : ns_(std::move(ns)), labels_(std::move(labels)) {
    if (!lattice::is_even(ns_)) throw input_error("NS lattice of a K3 must be even");
    if (ns_.rank() >= 1) {
      auto sig = lattice::signature(ns_);
      if (!(sig.positive == 1 && sig.negative == ns_.rank() - 1 && sig.null == 0))
        throw input_error("NS lattice must have signature (1, rank-1)");
    }
    if (!labels_.empty() && labels_.size() != ns_.rank())
      throw input_error("label count does not match NS rank");
  }

  const BilinearLattice& ns() const { return ns_; }
  std::size_t picard_rank() const { return ns_.rank(); }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  BilinearLattice ns_;
  std::vector<std::string> labels_;
};

/// Mukai vector (v0, v2, v4) = (r, d, s) with d written over the NS basis.
struct MukaiVector {
  Int r;
  Vec d;
  Int s;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// Coordinates in the algebraic Mukai lattice Z^(2+rho), ordered
/// (r, d_1..d_rho, s).
inline Vec extended_coords(const MukaiVector& v) {
  Vec x;
  x.reserve(v.d.size() + 2);
  x.push_back(v.r);
  for (const Int& c : v.d) x.push_back(c);
  x.push_back(v.s);
  return x;
}

inline MukaiVector from_extended_coords(const Vec& x) {
  if (x.size() < 2) throw input_error("extended Mukai coordinates need length >= 2");
  MukaiVector v;
  v.r = x.front();
  v.d.assign(x.begin() + 1, x.end() - 1);
  v.s = x.back();
  return v;
}

/// Gram matrix of Z^(2+rho): the NS block for the d-coordinates and a
/// hyperbolic -1 pairing between the r- and s-coordinates, matching
/// -v0*w4 + v2.w2 - v4*w0.
inline BilinearLattice extended_lattice(const K3Surface& surface) {
  const std::size_t rho = surface.picard_rank();
  Mat<Int> g(rho + 2, rho + 2);
  g(0, rho + 1) = -1;
  g(rho + 1, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) g(1 + i, 1 + j) = surface.ns().gram()(i, j);
  return BilinearLattice(std::move(g));
}

inline void check_vector(const K3Surface& surface, const MukaiVector& v) {
  if (v.d.size() != surface.picard_rank())
    throw input_error("Mukai vector d-part does not match NS rank");
}

/// -v0*w4 + v2.w2 - v4*w0 with v2.w2 taken in the NS form.
inline Int pairing(const K3Surface& surface, const MukaiVector& v, const MukaiVector& w) {
  check_vector(surface, v);
  check_vector(surface, w);
  return -v.r * w.s + dot(v.d, surface.ns().gram() * w.d) - v.s * w.r;
}

/// Mukai vector (r, c1, r + c1^2/2 - c2) of a sheaf with the given rank
/// and Chern data. c1^2 is even because the NS form is.
inline MukaiVector vector_of_sheaf(const K3Surface& surface, const Int& r, const Vec& c1,
                                   const Int& c2) {
  if (c1.size() != surface.picard_rank()) throw input_error("c1 does not match NS rank");
  Int c1sq = dot(c1, surface.ns().gram() * c1);
  if (c1sq % 2 != 0) throw input_error("c1^2 odd: NS lattice is not even");
  return MukaiVector{r, c1, r + c1sq / 2 - c2};
}

/// (v,v) + 2; may be negative, callers interpret.
inline Int moduli_dimension(const K3Surface& surface, const MukaiVector& v) {
  return pairing(surface, v, v) + 2;
}

/// Moduli space of stable sheaves with Mukai vector v: its dimension and
/// the Picard lattice computed as the saturated complement v-perp inside
/// the algebraic Mukai lattice.
struct ModuliSpace {
  MukaiVector v;
  Int dimension;
  SublatticeBasis picard_basis;  // vectors in extended (r, d.., s) coordinates
  BilinearLattice picard;

  std::size_t picard_rank() const { return picard_basis.rank(); }
};

inline ModuliSpace moduli_picard(const K3Surface& surface, const MukaiVector& v) {
  check_vector(surface, v);
  if (surface.picard_rank() < 1) throw input_error("moduli_picard needs NS rank >= 1");
  Int dim = moduli_dimension(surface, v);
  if (dim % 2 != 0 || dim < 0) throw input_error("moduli dimension must be even and nonnegative");
  BilinearLattice ext = extended_lattice(surface);
  SublatticeBasis basis = lattice::orthogonal_complement(ext, {extended_coords(v)});
  BilinearLattice picard = lattice::gram_of(ext, basis);
  return ModuliSpace{v, std::move(dim), std::move(basis), std::move(picard)};
}

enum class PicardVerdict { SamePicard, DifferentPicard, Inconclusive };

struct DistinguishResult {
  PicardVerdict verdict = PicardVerdict::Inconclusive;
  std::string invariant;               // set when DifferentPicard
  std::optional<Mat<Int>> witness;     // change of basis when found by search
  ModuliSpace first;
  ModuliSpace second;
};

/// Reference bases (in extended coordinates) used to certify SamePicard
/// without a search: if both are members of the respective complements
/// and induce identical Gram matrices, the Picard lattices are isomorphic.
struct ReferenceBases {
  std::vector<Vec> first;
  std::vector<Vec> second;
};

inline DistinguishResult distinguish(const K3Surface& surface, const MukaiVector& v1,
                                     const MukaiVector& v2, int entry_bound,
                                     const std::optional<ReferenceBases>& refs = std::nullopt) {
  DistinguishResult res;
  res.first = moduli_picard(surface, v1);
  res.second = moduli_picard(surface, v2);

  if (refs) {
    BilinearLattice ext = extended_lattice(surface);
    auto certified = [&](const ModuliSpace& m, const std::vector<Vec>& basis) {
      if (basis.size() != m.picard_rank()) return std::optional<BilinearLattice>();
      for (const Vec& x : basis)
        if (!m.picard_basis.contains(x)) return std::optional<BilinearLattice>();
      SublatticeBasis b{basis};
      return std::optional<BilinearLattice>(lattice::gram_of(ext, b));
    };
    auto g1 = certified(res.first, refs->first);
    auto g2 = certified(res.second, refs->second);
    if (g1 && g2 && g1->gram() == g2->gram()) {
      res.verdict = PicardVerdict::SamePicard;
      return res;
    }
  }

  if (res.first.picard_rank() != res.second.picard_rank()) {
    res.verdict = PicardVerdict::DifferentPicard;
    res.invariant = "rank";
    return res;
  }
  lattice::CongruenceResult c = lattice::congruent(res.first.picard, res.second.picard, entry_bound);
  switch (c.verdict) {
    case lattice::CongruenceVerdict::Yes:
      res.verdict = PicardVerdict::SamePicard;
      res.witness = c.witness;
      break;
    case lattice::CongruenceVerdict::No:
      res.verdict = PicardVerdict::DifferentPicard;
      res.invariant = c.invariant;
      break;
    case lattice::CongruenceVerdict::Inconclusive:
      res.verdict = PicardVerdict::Inconclusive;
      break;
  }
  return res;
}

}  // namespace moduli::mukai
