#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "moduli/numeric.hpp"
#include "moduli/plane_curves.hpp"

namespace moduli::fibers {

/// Point of P^1 as a homogeneous pair (x : y), not both zero; infinity
/// is (1 : 0). All arithmetic stays homogeneous so infinity needs no
/// special cases.
struct ProjectivePoint {
  Rat x;
  Rat y;

  ProjectivePoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {
    if (x == 0 && y == 0) throw input_error("(0 : 0) is not a point of P^1");
  }

  static ProjectivePoint infinity() { return {Rat(1), Rat(0)}; }
  static ProjectivePoint affine(Rat v) { return {std::move(v), Rat(1)}; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.x * b.y == a.y * b.x;
  }
};

inline Rat det2(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.x * b.y - a.y * b.x;
}

/// Cross-ratio lambda = f(p2)/f(q2) for f(z) = (z - p1)/(z - q1),
/// evaluated homogeneously. For four pairwise distinct points the value
/// never lands in {0, 1, infinity}.
inline Rat cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& q1,
                       const ProjectivePoint& p2, const ProjectivePoint& q2) {
  const std::array<const ProjectivePoint*, 4> pts{&p1, &q1, &p2, &q2};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) throw input_error("cross-ratio needs four distinct points");
  return (det2(p2, p1) * det2(q2, q1)) / (det2(p2, q1) * det2(q2, p1));
}

enum class FiberKind { Type1Smooth, Type2Nodal, Type3Cuspidal, Type4Binodal };

enum class Normalization { AbelianSurface, P1BundleOverElliptic, P1xP1 };

/// Gluing descriptor of the normalization. The type (2) translation and
/// the type (3) contraction are recorded symbolically; only type (4)
/// carries a modulus (the cross-ratio).
struct GlueNone {
  friend bool operator==(const GlueNone&, const GlueNone&) = default;
};
struct GlueTranslationByPMinusQ {
  friend bool operator==(const GlueTranslationByPMinusQ&, const GlueTranslationByPMinusQ&) = default;
};
struct GlueContractAlongSInfinity {
  friend bool operator==(const GlueContractAlongSInfinity&, const GlueContractAlongSInfinity&) = default;
};
struct GlueCrossRatio {
  Rat lambda;
  friend bool operator==(const GlueCrossRatio&, const GlueCrossRatio&) = default;
};
using Gluing =
    std::variant<GlueNone, GlueTranslationByPMinusQ, GlueContractAlongSInfinity, GlueCrossRatio>;

/// Combinatorial model of a compactified Jacobian fiber: what the
/// normalization is, how it is glued, and a stratification fine enough
/// to read off the Euler characteristic.
struct FiberModel {
  FiberKind kind;
  Normalization normalization;
  Gluing gluing;
  std::vector<std::pair<std::string, Int>> strata;

  friend bool operator==(const FiberModel&, const FiberModel&) = default;
};

inline FiberModel type1_smooth() {
  return {FiberKind::Type1Smooth,
          Normalization::AbelianSurface,
          GlueNone{},
          {{"surface", 0}}};
}

/// P(L_p + L_q) over the elliptic Jacobian with the sections s_0, s_oo
/// identified by translation; the glued section is one elliptic curve.
inline FiberModel type2_nodal() {
  return {FiberKind::Type2Nodal,
          Normalization::P1BundleOverElliptic,
          GlueTranslationByPMinusQ{},
          {{"cstar_bundle", 0}, {"glued_section", 0}}};
}

/// P(J^1 L_p) with s_oo contracted to a cuspidal locus homeomorphic to
/// the elliptic base. The direction of the contraction is not modeled.
inline FiberModel type3_cuspidal() {
  return {FiberKind::Type3Cuspidal,
          Normalization::P1BundleOverElliptic,
          GlueContractAlongSInfinity{},
          {{"affine_bundle", 0}, {"cusp_locus", 0}}};
}

/// P^1 x P^1 with both pairs of opposite rulings identified via
/// multiplication by lambda; lambda must avoid {0, 1, infinity}.
inline FiberModel type4_binodal(const Rat& lambda) {
  if (lambda == 0 || lambda == 1)
    throw input_error("type (4) cross-ratio must avoid {0, 1, infinity}");
  return {FiberKind::Type4Binodal,
          Normalization::P1xP1,
          GlueCrossRatio{lambda},
          {{"torus", 0}, {"edge1", 0}, {"edge2", 0}, {"vertex", 1}}};
}

inline FiberModel type4_binodal(const ProjectivePoint& p1, const ProjectivePoint& q1,
                                const ProjectivePoint& p2, const ProjectivePoint& q2) {
  return type4_binodal(cross_ratio(p1, q1, p2, q2));
}

inline FiberModel build_fiber_model(FiberKind kind, const std::optional<Rat>& lambda = {}) {
  switch (kind) {
    case FiberKind::Type1Smooth:
      return type1_smooth();
    case FiberKind::Type2Nodal:
      return type2_nodal();
    case FiberKind::Type3Cuspidal:
      return type3_cuspidal();
    case FiberKind::Type4Binodal:
      if (!lambda) throw input_error("type (4) model needs a cross-ratio");
      return type4_binodal(*lambda);
  }
  throw input_error("unknown fiber kind");
}

inline Int fiber_euler(const FiberModel& m) {
  Int chi = 0;
  for (const auto& [name, e] : m.strata) chi += e;
  return chi;
}

/// Tensoring by a fixed degree d line bundle is an isomorphism of the
/// compactified Jacobians, so every invariant of the model is unchanged.
inline FiberModel degree_shift(const FiberModel& m, const Int& /*d*/) { return m; }

/// Autoduality: the compactified Picard scheme of the compactified
/// Jacobian is the compactified Jacobian again, with the same gluing
/// (for type (2), the very same translation).
inline FiberModel dual_fiber_model(const FiberModel& m) { return m; }

/// Dimension of the locus of pairs of points lying in a common singular
/// fiber: the discriminant contributes its dimension and each point
/// moves in a fiber.
inline Int incidence_dimension(const Int& base_dim, const Int& discriminant_dim,
                               const Int& fiber_dim) {
  if (base_dim < 0 || discriminant_dim < 0 || fiber_dim < 0)
    throw input_error("incidence dimensions must be >= 0");
  if (discriminant_dim > base_dim)
    throw input_error("discriminant cannot exceed the base dimension");
  return discriminant_dim + 2 * fiber_dim;
}

/// The removable-singularities criterion tolerates an Ext-support locus
/// of dimension up to n+1.
inline bool bm_bound_ok(const Int& gamma_dim, const Int& n) { return gamma_dim <= n + 1; }

/// Sum over strata of base Euler number times fiber Euler number.
inline Int total_euler(const curves::LinearSystemStratification& strat,
                       const std::map<int, FiberModel>& fiber_by_type) {
  Int chi = 0;
  for (const auto& st : strat.strata) {
    auto it = fiber_by_type.find(st.curve_type);
    if (it == fiber_by_type.end())
      throw input_error("missing fiber model for curve type " + std::to_string(st.curve_type));
    chi += st.base_euler * fiber_euler(it->second);
  }
  return chi;
}

/// The standard four fiber models; type (4) taken at a reference
/// cross-ratio (the Euler numbers do not depend on it).
inline std::map<int, FiberModel> standard_fiber_models() {
  return {{1, type1_smooth()},
          {2, type2_nodal()},
          {3, type3_cuspidal()},
          {4, type4_binodal(Rat(1, 2))}};
}

}  // namespace moduli::fibers
