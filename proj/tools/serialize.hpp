#pragma once

// JSON encoding of the library's value types. Conventions: exact
// rationals are "p/q" strings, Gaussian rationals "p/q+r/s i", integers
// plain JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Keys are emitted sorted, so identical inputs give
// byte-identical outputs.

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "moduli/cech.hpp"
#include "moduli/fibers.hpp"
#include "moduli/lattice.hpp"
#include "moduli/mukai.hpp"
#include "moduli/plane_curves.hpp"
#include "moduli/specseq.hpp"

namespace moduli::io {

using nlohmann::json;

inline json to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline json to_json(const Rat& r) { return moduli::to_string(r); }
inline json to_json(const GaussianRat& z) { return moduli::to_string(z); }

inline Int int_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (r && is_integer(*r)) return numerator(*r);
  }
  throw input_error(what + ": expected an integer");
}

inline Rat rat_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (r) return *r;
  }
  throw input_error(what + ": expected a rational \"p/q\"");
}

inline GaussianRat gaussian_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return GaussianRat(Rat(j.get<long long>()));
  if (j.is_string()) {
    auto z = parse_gaussian(j.get<std::string>());
    if (z) return *z;
  }
  if (j.is_array() && j.size() == 2)
    return GaussianRat(rat_from_json(j[0], what), rat_from_json(j[1], what));
  throw input_error(what + ": expected a Gaussian rational \"p/q+r/s i\"");
}

inline json to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

inline std::vector<Int> vec_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + ": expected an array of integers");
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x, what));
  return v;
}

inline json to_json(const Mat<Int>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Mat<Int> matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw input_error(what + ": expected an array of arrays");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Mat<Int> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw input_error(what + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c], what);
  }
  return m;
}

inline lattice::BilinearLattice lattice_from_json(const json& j, const std::string& what) {
  return lattice::BilinearLattice(matrix_from_json(j, what));
}

inline mukai::K3Surface surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ns")) throw input_error("surface: expected {\"ns\": [[..]]}");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return mukai::K3Surface(lattice_from_json(j["ns"], "ns"), labels);
}

inline json to_json(const mukai::MukaiVector& v) {
  return json::array({to_json(v.r), to_json(v.d), to_json(v.s)});
}

inline mukai::MukaiVector mukai_vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw input_error(what + ": expected [r, [d..], s]");
  return mukai::MukaiVector{int_from_json(j[0], what), vec_from_json(j[1], what),
                            int_from_json(j[2], what)};
}

inline json to_json(const lattice::SublatticeBasis& b) {
  json a = json::array();
  for (const auto& v : b.vectors) a.push_back(to_json(v));
  return a;
}

inline json to_json(const lattice::Signature& s) {
  return json{{"negative", s.negative}, {"null", s.null}, {"positive", s.positive}};
}

inline json to_json(const curves::PlaneCurveClass& c) {
  return json{{"cusps", to_json(c.cusps)}, {"degree", to_json(c.degree)}, {"nodes", to_json(c.nodes)}};
}

inline curves::PlaneCurveClass curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree"))
    throw input_error("curve: expected {\"degree\", \"nodes\", \"cusps\"}");
  curves::PlaneCurveClass c{int_from_json(j["degree"], "degree"), 0, 0};
  if (j.contains("nodes")) c.nodes = int_from_json(j["nodes"], "nodes");
  if (j.contains("cusps")) c.cusps = int_from_json(j["cusps"], "cusps");
  return c;
}

inline json to_json(const curves::LinearSystemStratification& s) {
  json strata = json::array();
  for (const auto& st : s.strata) {
    json count;
    if (std::holds_alternative<Int>(st.count))
      count = to_json(std::get<Int>(st.count));
    else
      count = std::get<std::string>(st.count);
    strata.push_back(json{{"base_dimension", st.base_dimension},
                          {"base_euler", to_json(st.base_euler)},
                          {"count", count},
                          {"curve_type", st.curve_type}});
  }
  return json{{"strata", strata}};
}

inline const char* kind_name(fibers::FiberKind k) {
  switch (k) {
    case fibers::FiberKind::Type1Smooth: return "type1_smooth";
    case fibers::FiberKind::Type2Nodal: return "type2_nodal";
    case fibers::FiberKind::Type3Cuspidal: return "type3_cuspidal";
    case fibers::FiberKind::Type4Binodal: return "type4_binodal";
  }
  return "unknown";
}

inline const char* normalization_name(fibers::Normalization n) {
  switch (n) {
    case fibers::Normalization::AbelianSurface: return "abelian_surface";
    case fibers::Normalization::P1BundleOverElliptic: return "p1_bundle_over_elliptic";
    case fibers::Normalization::P1xP1: return "p1_x_p1";
  }
  return "unknown";
}

inline json to_json(const fibers::FiberModel& m) {
  json gluing;
  if (std::holds_alternative<fibers::GlueNone>(m.gluing))
    gluing = json{{"kind", "none"}};
  else if (std::holds_alternative<fibers::GlueTranslationByPMinusQ>(m.gluing))
    gluing = json{{"kind", "translation_by_p_minus_q"}};
  else if (std::holds_alternative<fibers::GlueContractAlongSInfinity>(m.gluing))
    gluing = json{{"kind", "contract_along_s_infinity"}};
  else
    gluing = json{{"kind", "cross_ratio"},
                  {"lambda", to_json(std::get<fibers::GlueCrossRatio>(m.gluing).lambda)}};
  json strata = json::array();
  for (const auto& [name, e] : m.strata) strata.push_back(json{{"euler", to_json(e)}, {"name", name}});
  return json{{"gluing", gluing},
              {"kind", kind_name(m.kind)},
              {"normalization", normalization_name(m.normalization)},
              {"strata", strata}};
}

inline fibers::FiberModel fiber_model_from_json(const json& j) {
  if (j.is_number_integer() || (j.is_object() && j.contains("type"))) {
    int t = j.is_number_integer() ? j.get<int>() : j["type"].get<int>();
    std::optional<Rat> lambda;
    if (j.is_object() && j.contains("lambda")) lambda = rat_from_json(j["lambda"], "lambda");
    if (j.is_object() && j.contains("points")) {
      const json& pts = j["points"];
      if (!pts.is_array() || pts.size() != 4) throw input_error("points: expected four points");
      auto pp = [&](const json& p) {
        if (p.is_array() && p.size() == 2)
          return fibers::ProjectivePoint(rat_from_json(p[0], "point"), rat_from_json(p[1], "point"));
        if (p.is_string() && p.get<std::string>() == "inf")
          return fibers::ProjectivePoint::infinity();
        return fibers::ProjectivePoint::affine(rat_from_json(p, "point"));
      };
      lambda = fibers::cross_ratio(pp(pts[0]), pp(pts[1]), pp(pts[2]), pp(pts[3]));
    }
    switch (t) {
      case 1: return fibers::type1_smooth();
      case 2: return fibers::type2_nodal();
      case 3: return fibers::type3_cuspidal();
      case 4:
        if (!lambda) throw input_error("type 4 model needs \"lambda\" or \"points\"");
        return fibers::type4_binodal(*lambda);
      default: throw input_error("fiber type must be 1..4");
    }
  }
  throw input_error("fiber model: expected {\"type\": 1..4, ...}");
}

inline fibers::ProjectivePoint point_from_json(const json& p) {
  if (p.is_array() && p.size() == 2)
    return fibers::ProjectivePoint(rat_from_json(p[0], "point"), rat_from_json(p[1], "point"));
  if (p.is_string() && p.get<std::string>() == "inf") return fibers::ProjectivePoint::infinity();
  return fibers::ProjectivePoint::affine(rat_from_json(p, "point"));
}

inline json to_json(const specseq::Page& p) {
  json entries = json::array();
  for (const auto& [cell, rank] : p.entries)
    entries.push_back(json::array({cell.first, cell.second, to_json(rank)}));
  return json{{"entries", entries}, {"height", p.height}, {"r", p.r}, {"width", p.width}};
}

inline specseq::Page page_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw input_error("page: expected {\"entries\": [[i,j,rank]..], ...}");
  specseq::Page p;
  p.r = j.value("r", 2);
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) throw input_error("page entry: expected [i, j, rank]");
    int i = e[0].get<int>(), jj = e[1].get<int>();
    p.entries[{i, jj}] = int_from_json(e[2], "rank");
    p.width = std::max(p.width, i);
    p.height = std::max(p.height, jj);
  }
  p.width = std::max(p.width, j.value("width", 0));
  p.height = std::max(p.height, j.value("height", 0));
  p.validate();
  return p;
}

inline specseq::DifferentialAssignment differentials_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ranks"))
    throw input_error("differentials: expected {\"r\": .., \"ranks\": [[i,j,rank]..]}");
  specseq::DifferentialAssignment d;
  d.r = j.value("r", 2);
  for (const auto& e : j["ranks"]) {
    if (!e.is_array() || e.size() != 3) throw input_error("differential entry: expected [i, j, rank]");
    d.ranks[{e[0].get<int>(), e[1].get<int>()}] = int_from_json(e[2], "rank");
  }
  return d;
}

inline json to_json(const cech::Simplex& s) {
  json a = json::array();
  for (int i : s) a.push_back(i);
  return a;
}

inline cech::CoverNerve nerve_from_json(const json& j) {
  if (!j.is_object()) throw input_error("nerve: expected {\"opens\": .., \"simplices\": [[..]..]}");
  std::vector<std::string> opens;
  if (j.contains("opens")) {
    if (j["opens"].is_number_integer()) {
      for (int i = 0; i < j["opens"].get<int>(); ++i) opens.push_back("U" + std::to_string(i));
    } else {
      opens = j["opens"].get<std::vector<std::string>>();
    }
  }
  std::vector<cech::Simplex> simplices;
  if (j.contains("simplices"))
    for (const auto& s : j["simplices"]) simplices.push_back(s.get<cech::Simplex>());
  if (opens.empty()) {
    int n = 0;
    for (const auto& s : simplices)
      for (int i : s) n = std::max(n, i + 1);
    for (int i = 0; i < n; ++i) opens.push_back("U" + std::to_string(i));
  }
  return cech::CoverNerve(opens, simplices);
}

template <class G>
json cochain_to_json(const cech::Cochain<G>& c) {
  json values = json::array();
  for (const auto& [s, v] : c.values) values.push_back(json::array({to_json(s), to_json(v)}));
  return json{{"degree", c.degree}, {"group", G::name()}, {"values", values}};
}

template <class G>
cech::Cochain<G> cochain_from_json(const json& j, const cech::CoverNerve& nerve,
                                   auto parse_element) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("values"))
    throw input_error("cochain: expected {\"degree\": n, \"values\": [[[i..], value]..]}");
  cech::Cochain<G> c;
  c.degree = j["degree"].get<int>();
  for (const auto& e : j["values"]) {
    if (!e.is_array() || e.size() != 2) throw input_error("cochain value: expected [simplex, value]");
    cech::Simplex s = e[0].get<cech::Simplex>();
    c.values[s] = G::canonical(parse_element(e[1]));
  }
  // fill unmentioned simplices with zero so sparse inputs are accepted
  for (const cech::Simplex& s : nerve.simplices(c.degree))
    if (!c.values.count(s)) c.values[s] = G::zero();
  return c;
}

inline cech::Cochain<cech::IntegerGroup> int_cochain_from_json(const json& j,
                                                               const cech::CoverNerve& nerve) {
  return cochain_from_json<cech::IntegerGroup>(
      j, nerve, [](const json& v) { return int_from_json(v, "cochain value"); });
}

inline cech::Cochain<cech::GaussianGroup> gaussian_cochain_from_json(const json& j,
                                                                     const cech::CoverNerve& nerve) {
  return cochain_from_json<cech::GaussianGroup>(
      j, nerve, [](const json& v) { return gaussian_from_json(v, "cochain value"); });
}

inline cech::Cochain<cech::ModZGroup> modz_cochain_from_json(const json& j,
                                                             const cech::CoverNerve& nerve) {
  return cochain_from_json<cech::ModZGroup>(
      j, nerve, [](const json& v) { return gaussian_from_json(v, "cochain value"); });
}

}  // namespace moduli::io
