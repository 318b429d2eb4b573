#pragma once

#include <string>
#include <variant>
#include <vector>

#include "moduli/numeric.hpp"

namespace moduli::curves {

/// Numerical type of a plane curve whose only singularities are nodes
/// and cusps.
struct PlaneCurveClass {
  Int degree;
  Int nodes;  // delta
  Int cusps;  // kappa

  friend bool operator==(const PlaneCurveClass&, const PlaneCurveClass&) = default;
};

inline void validate(const PlaneCurveClass& c) {
  if (c.degree < 1) throw input_error("curve degree must be >= 1");
  if (c.nodes < 0 || c.cusps < 0) throw input_error("singularity counts must be >= 0");
  Int g = (c.degree - 1) * (c.degree - 2) / 2 - c.nodes - c.cusps;
  if (g < 0) throw input_error("singularity data exceeds the arithmetic genus");
}

/// (d-1)(d-2)/2 - delta - kappa.
inline Int geometric_genus(const PlaneCurveClass& c) {
  validate(c);
  return (c.degree - 1) * (c.degree - 2) / 2 - c.nodes - c.cusps;
}

/// Degree of the dual curve: d(d-1) - 2*delta - 3*kappa.
inline Int dual_degree(const PlaneCurveClass& c) {
  validate(c);
  if (c.degree < 2) throw input_error("dual curve undefined for lines");
  Int d = c.degree * (c.degree - 1) - 2 * c.nodes - 3 * c.cusps;
  if (d < 0) throw input_error("inconsistent singularity data: negative dual degree");
  return d;
}

/// Cusps of the dual curve = flexes of c: 3d(d-2) - 6*delta - 8*kappa.
inline Int dual_cusps(const PlaneCurveClass& c) {
  validate(c);
  if (c.degree < 2) throw input_error("dual curve undefined for lines");
  Int f = 3 * c.degree * (c.degree - 2) - 6 * c.nodes - 8 * c.cusps;
  if (f < 0) throw input_error("inconsistent singularity data: negative flex count");
  return f;
}

/// Nodes of the dual curve = bitangents; smooth curves only, where the
/// count is d(d-2)(d^2-9)/2.
inline Int dual_nodes(const PlaneCurveClass& c) {
  validate(c);
  if (c.degree < 2) throw input_error("dual curve undefined for lines");
  if (c.nodes != 0 || c.cusps != 0)
    throw input_error("bitangent count supported for smooth curves only");
  return c.degree * (c.degree - 2) * (c.degree * c.degree - 9) / 2;
}

/// Full dual-curve class of a smooth curve.
inline PlaneCurveClass dual_curve(const PlaneCurveClass& c) {
  return PlaneCurveClass{dual_degree(c), dual_nodes(c), dual_cusps(c)};
}

/// Topological Euler characteristic of the image curve: each node glues
/// two points (-1 each), a cusp is a bijection on points (no correction).
inline Int nodal_curve_euler(const PlaneCurveClass& c) {
  return 2 - 2 * geometric_genus(c) - c.nodes;
}

/// One stratum of the linear system |C| on the double plane, indexed by
/// the curve type of the members.
struct Stratum {
  int curve_type;  // 1..4
  int base_dimension;
  std::variant<Int, std::string> count;  // finite count, or "curve"/"generic"
  Int base_euler;
};

struct LinearSystemStratification {
  std::vector<Stratum> strata;

  Int base_euler_sum() const {
    Int s = 0;
    for (const auto& st : strata) s += st.base_euler;
    return s;
  }
};

/// Stratification of |C| = P^2 for the double cover branched over a
/// generic (tritangent-free) smooth sextic: generic lines, simple
/// tangents, flex lines, bitangents. Base Euler numbers are distributed
/// so that the open stratum gets chi(P^2) - chi(dual curve) and the
/// punctured dual curve keeps the rest; they always sum to chi(P^2) = 3.
inline LinearSystemStratification stratify_sextic() {
  const PlaneCurveClass sextic{6, 0, 0};
  const PlaneCurveClass dual = dual_curve(sextic);
  const Int chi_dual = nodal_curve_euler(dual);
  const Int flexes = dual.cusps;
  const Int bitangents = dual.nodes;
  LinearSystemStratification s;
  s.strata.push_back({1, 2, std::string("generic"), 3 - chi_dual});
  s.strata.push_back({2, 1, std::string("curve"), chi_dual - flexes - bitangents});
  s.strata.push_back({3, 0, flexes, flexes});
  s.strata.push_back({4, 0, bitangents, bitangents});
  return s;
}

/// Genus of a double cover of P^1 with the given number of simple branch
/// points: 2g - 2 = 2*(-2) + b.
inline Int branch_genus(const Int& branch_points) {
  if (branch_points < 0) throw input_error("branch point count must be >= 0");
  if (branch_points % 2 != 0) throw input_error("double covers of P^1 have evenly many branch points");
  return (branch_points - 2) / 2;
}

}  // namespace moduli::curves
