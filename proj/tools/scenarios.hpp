#pragma once

// Bundled worked computations: each scenario reproduces one cluster of
// reference values with a pass/fail verdict per check. Randomized checks
// use fixed seeds, so reports are byte-identical across runs.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace moduli::scenarios {

using nlohmann::json;

struct Check {
  std::string name;
  json computed;
  json expected;
  std::string source;
  bool pass = false;
};

struct ScenarioReport {
  std::string id;
  std::string description;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks)
      checks_json.push_back(json{{"computed", c.computed},
                                 {"expected", c.expected},
                                 {"name", c.name},
                                 {"pass", c.pass},
                                 {"source", c.source}});
    return json{{"checks", checks_json},
                {"description", description},
                {"id", id},
                {"pass", pass()}};
  }
};

class Builder {
public:
  Builder(std::string id, std::string description) {
    report_.id = std::move(id);
    report_.description = std::move(description);
  }

  void check(const std::string& name, json computed, json expected, const std::string& source) {
    Check c{name, std::move(computed), std::move(expected), source};
    c.pass = c.computed == c.expected;
    report_.checks.push_back(std::move(c));
  }

  ScenarioReport take() { return std::move(report_); }

private:
  ScenarioReport report_;
};

// ---------------------------------------------------------------- helpers

inline Rat random_rat(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rat(num(rng), den(rng));
}

inline fibers::ProjectivePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (pick(rng) == 0) return fibers::ProjectivePoint::infinity();
  return fibers::ProjectivePoint::affine(random_rat(rng));
}

// ---------------------------------------------------------------- scenarios

inline ScenarioReport scenario_picard_z0_z1() {
  Builder b("picard-z0-z1",
            "Picard lattices of the degree-0 and degree-1 abelian-surface fibrations over a "
            "generic branch sextic, distinguished by determinant");
  mukai::K3Surface s(lattice::BilinearLattice(Mat<Int>{{2}}));
  auto ext = mukai::extended_lattice(s);
  auto m0 = mukai::moduli_picard(s, {0, {1}, -1});
  auto m1 = mukai::moduli_picard(s, {0, {1}, 0});

  lattice::BilinearLattice g0(Mat<Int>{{2, 2}, {2, 0}});
  lattice::BilinearLattice g1(Mat<Int>{{0, 1}, {1, 0}});
  b.check("degree0.gram_congruent",
          lattice::congruent(m0.picard, g0, 2).verdict == lattice::CongruenceVerdict::Yes, true,
          "bounded change-of-basis search");
  b.check("degree1.gram_congruent",
          lattice::congruent(m1.picard, g1, 2).verdict == lattice::CongruenceVerdict::Yes, true,
          "bounded change-of-basis search");

  lattice::SublatticeBasis ref0{{{-2, 1, 0}, {0, 0, 1}}};
  lattice::SublatticeBasis ref1{{{-1, 0, 0}, {0, 0, 1}}};
  b.check("degree0.reference_basis_member",
          m0.picard_basis.contains({-2, 1, 0}) && m0.picard_basis.contains({0, 0, 1}), true,
          "exact membership solve");
  b.check("degree1.reference_basis_member",
          m1.picard_basis.contains({-1, 0, 0}) && m1.picard_basis.contains({0, 0, 1}), true,
          "exact membership solve");
  b.check("degree0.reference_gram", io::to_json(lattice::gram_of(ext, ref0).gram()),
          io::to_json(g0.gram()), "Gram of the reference basis");
  b.check("degree1.reference_gram", io::to_json(lattice::gram_of(ext, ref1).gram()),
          io::to_json(g1.gram()), "Gram of the reference basis");

  b.check("determinants", json::array({io::to_json(lattice::determinant(m0.picard)),
                                       io::to_json(lattice::determinant(m1.picard))}),
          json::array({-4, -1}), "exact determinant");
  auto d = mukai::distinguish(s, {0, {1}, -1}, {0, {1}, 0}, 2);
  b.check("distinguish", d.verdict == mukai::PicardVerdict::DifferentPicard && d.invariant == "determinant",
          true, "only the second form is unimodular");
  return b.take();
}

inline ScenarioReport scenario_picard_tritangent() {
  Builder b("picard-tritangent",
            "Rank-3 Picard lattices in the tritangent (Picard rank 2) case: both moduli spaces "
            "carry the form [[0,1,0],[1,0,0],[0,0,-10]]");
  mukai::K3Surface s(lattice::BilinearLattice(Mat<Int>{{-2, 3}, {3, -2}}));
  auto ext = mukai::extended_lattice(s);
  mukai::MukaiVector v0{0, {1, 1}, -1}, v1{0, {1, 1}, 0};
  auto m0 = mukai::moduli_picard(s, v0);
  auto m1 = mukai::moduli_picard(s, v1);
  b.check("ranks", json::array({m0.picard_rank(), m1.picard_rank()}), json::array({3, 3}),
          "complement of a rank-1 pairing in Z^4");

  std::vector<lattice::Vec> ref0 = {{-1, 1, 0, 1}, {-5, 4, 1, 1}, {-10, 9, 1, 5}};
  std::vector<lattice::Vec> ref1 = {{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, -1, 0}};
  bool member0 = true, member1 = true;
  for (const auto& x : ref0) member0 = member0 && m0.picard_basis.contains(x);
  for (const auto& x : ref1) member1 = member1 && m1.picard_basis.contains(x);
  b.check("reference_bases_member", json::array({member0, member1}), json::array({true, true}),
          "exact membership solve");

  Mat<Int> target{{0, 1, 0}, {1, 0, 0}, {0, 0, -10}};
  b.check("degree0.reference_gram",
          io::to_json(lattice::gram_of(ext, lattice::SublatticeBasis{ref0}).gram()),
          io::to_json(target), "Gram of the reference basis");
  b.check("degree1.reference_gram",
          io::to_json(lattice::gram_of(ext, lattice::SublatticeBasis{ref1}).gram()),
          io::to_json(target), "Gram of the reference basis");

  auto d = mukai::distinguish(s, v0, v1, 3, mukai::ReferenceBases{ref0, ref1});
  b.check("distinguish", d.verdict == mukai::PicardVerdict::SamePicard, true,
          "membership plus identical reference Grams");
  return b.take();
}

inline ScenarioReport scenario_pluecker_sextic() {
  Builder b("pluecker-sextic",
            "Dual curve of a smooth plane sextic: degree 30 with 72 cusps and 324 nodes, plus "
            "the biduality and genus cross-checks");
  curves::PlaneCurveClass sextic{6, 0, 0};
  auto dual = curves::dual_curve(sextic);
  b.check("dual", io::to_json(dual),
          json{{"cusps", 72}, {"degree", 30}, {"nodes", 324}}, "Pluecker formulas");
  b.check("bidual_degree", io::to_json(curves::dual_degree(dual)), 6, "30*29 - 2*324 - 3*72");
  b.check("dual_genus", io::to_json(curves::geometric_genus(dual)), 10, "29*28/2 - 324 - 72");
  b.check("sextic_genus", io::to_json(curves::geometric_genus(sextic)), 10, "5*4/2");
  b.check("dual_euler", io::to_json(curves::nodal_curve_euler(dual)), -342,
          "(2 - 2*10) - 324");
  b.check("branch_genus", io::to_json(curves::branch_genus(6)), 2,
          "Riemann-Hurwitz for a double cover of P^1");
  return b.take();
}

inline ScenarioReport scenario_euler_324() {
  Builder b("euler-324",
            "Euler characteristic of the abelian-surface fibration: only the binodal fibers "
            "contribute, one per bitangent");
  auto strat = curves::stratify_sextic();
  auto models = fibers::standard_fiber_models();
  json eulers = json::array();
  for (int t = 1; t <= 4; ++t) eulers.push_back(io::to_json(fibers::fiber_euler(models.at(t))));
  b.check("fiber_eulers", eulers, json::array({0, 0, 0, 1}), "stratum sums per fiber type");
  b.check("base_euler_sum", io::to_json(strat.base_euler_sum()), 3, "chi(P^2)");
  json strata_eulers = json::array();
  for (const auto& st : strat.strata) strata_eulers.push_back(io::to_json(st.base_euler));
  b.check("base_eulers", strata_eulers, json::array({345, -738, 72, 324}),
          "chi splits over the discriminant stratification");
  b.check("total_euler", io::to_json(fibers::total_euler(strat, models)), 324,
          "sum of base chi times fiber chi");
  return b.take();
}

inline ScenarioReport scenario_leray_o() {
  Builder b("leray-O",
            "Structure-sheaf Leray page of the fibration: diagonal E2, forced degeneration, "
            "alternating abutment");
  auto page = specseq::leray_o_page();
  json entries = json::array();
  for (int i = 0; i <= 2; ++i) entries.push_back(io::to_json(page.entry(i, i)));
  b.check("diagonal", entries, json::array({1, 1, 1}), "one line of Omega^j cohomology each");
  b.check("forced_degeneration", specseq::forced_degeneration(page), true,
          "every differential has a zero end");
  json h = json::array();
  for (const Int& n : specseq::abutment(page)) h.push_back(io::to_json(n));
  b.check("abutment", h, json::array({1, 0, 1, 0, 1}), "antidiagonal totals");
  auto next = specseq::next_page(page, specseq::DifferentialAssignment{2, {}});
  b.check("stable_under_zero_differentials", next.entries == page.entries, true,
          "E3 equals E2 cellwise");
  return b.take();
}

inline ScenarioReport scenario_koszul_vanishing() {
  Builder b("koszul-vanishing",
            "Ext vanishing between distinct rank-one sheaves on a degenerate abelian surface, "
            "by induction up the Koszul page");
  auto e = specseq::deduce_ext_vanishing(2, true, 6);
  json ejson = json::array();
  for (const Int& x : e) ejson.push_back(io::to_json(x));
  b.check("ext_ranks", ejson, json::array({0, 0, 0, 0, 0, 0, 0}), "bottom-row induction");

  bool contrapositive = true;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<Int> ranks{(mask >> 0) & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    auto page = specseq::koszul_page(ranks, 2);
    Int total = 0;
    for (const Int& h : specseq::abutment(page)) total += h;
    contrapositive = contrapositive && total > 0;
  }
  b.check("nonzero_ext_forces_nonzero_abutment", contrapositive, true,
          "exhaustive over e in {0,1}^3");
  return b.take();
}

inline ScenarioReport scenario_gerbe_cocycle() {
  Builder b("gerbe-cocycle",
            "Cech calculus for gerbes: the differential squares to zero, the trivialization "
            "2-cocycle is class-invariant under regauging, and the sphere generator admits no "
            "twisted gluing");
  std::mt19937_64 rng(20250811);
  std::uniform_int_distribution<int> small(-4, 4);

  int cases = 0;
  bool delta_squared_zero = true;
  std::vector<cech::CoverNerve> nerves;
  for (int n = 3; n <= 6; ++n) {
    nerves.push_back(cech::CoverNerve::full(n));
    nerves.push_back(cech::CoverNerve::boundary(n));
  }
  for (const auto& nerve : nerves) {
    for (int rep = 0; rep < 45 && delta_squared_zero; ++rep) {
      for (int deg = 0; deg <= std::min(2, nerve.max_dim()); ++deg) {
        cech::Cochain<cech::GaussianGroup> cq;
        cq.degree = deg;
        cech::Cochain<cech::ModZGroup> cm;
        cm.degree = deg;
        cech::Cochain<cech::IntegerGroup> ci;
        ci.degree = deg;
        for (const auto& s : nerve.simplices(deg)) {
          cq.values[s] = GaussianRat(random_rat(rng), random_rat(rng));
          cm.values[s] = cech::ModZGroup::canonical(GaussianRat(random_rat(rng), random_rat(rng)));
          ci.values[s] = small(rng);
        }
        delta_squared_zero = delta_squared_zero &&
                             cech::is_zero(cech::coboundary(nerve, cech::coboundary(nerve, cq))) &&
                             cech::is_zero(cech::coboundary(nerve, cech::coboundary(nerve, cm))) &&
                             cech::is_zero(cech::coboundary(nerve, cech::coboundary(nerve, ci)));
        cases += 3;
      }
    }
  }
  b.check("delta_squared_zero_cases", json::array({delta_squared_zero, cases >= 1000}),
          json::array({true, true}), "randomized over nerves with up to 6 opens");

  auto nerve = cech::CoverNerve::full(4);
  auto random_modz_cochain = [&](int deg) {
    cech::Cochain<cech::ModZGroup> c;
    c.degree = deg;
    for (const auto& s : nerve.simplices(deg))
      c.values[s] = cech::ModZGroup::canonical(GaussianRat(random_rat(rng), random_rat(rng)));
    return c;
  };
  auto classes = cech::zero_cochain<cech::IntegerGroup>(nerve, 1);
  auto scalars = random_modz_cochain(1);
  auto beta = cech::gerbe_from_trivializations(nerve, classes, scalars);
  auto mu = random_modz_cochain(0);
  auto regauged = cech::add(scalars, cech::coboundary(nerve, mu));
  auto beta_regauged = cech::gerbe_from_trivializations(nerve, classes, regauged);
  b.check("regauging_fixes_cocycle", cech::equal(beta, beta_regauged), true,
          "delta kills the regauging term");
  auto scalars2 = random_modz_cochain(1);
  auto beta2 = cech::gerbe_from_trivializations(nerve, classes, scalars2);
  b.check("independent_scalars_cohomologous",
          cech::is_coboundary(nerve, cech::subtract(beta2, beta)).has_value(), true,
          "exact coboundary solver");

  auto sphere = cech::CoverNerve::boundary(4);
  auto generator = cech::zero_cochain<cech::ModZGroup>(sphere, 2);
  generator.values[{0, 1, 2}] = GaussianRat(Rat(1, 2));
  b.check("generator_is_cocycle", cech::is_cocycle(sphere, generator), true,
          "no triple-overlap boundaries on the sphere nerve");
  b.check("generator_not_coboundary", cech::is_coboundary(sphere, generator).has_value(), false,
          "slack lattice has no integer point");
  // exhaustive bounded search for a gluing psi with delta psi = generator
  const auto& edges = sphere.simplices(1);
  std::vector<Rat> alphabet;
  for (int q = 1; q <= 4; ++q)
    for (int p = 0; p < q; ++p)
      if (gcd(Int(p), Int(q)) == 1) alphabet.push_back(Rat(p, q));
  bool found = false;
  std::vector<std::size_t> idx(edges.size(), 0);
  for (;;) {
    cech::Cochain<cech::ModZGroup> psi;
    psi.degree = 1;
    for (std::size_t k = 0; k < edges.size(); ++k)
      psi.values[edges[k]] = GaussianRat(alphabet[idx[k]]);
    if (cech::twisted_glue_check(sphere, psi, generator)) {
      found = true;
      break;
    }
    std::size_t k = edges.size();
    while (k-- > 0) {
      if (++idx[k] < alphabet.size()) break;
      idx[k] = 0;
      if (k == 0) goto done;
    }
  }
done:
  b.check("no_bounded_gluing", found, false,
          "exhaustive over denominators up to 4 on all six overlaps");
  return b.take();
}

inline ScenarioReport scenario_torsor_path() {
  Builder b("torsor-path",
            "One-parameter family of gerbes from a rational 2-cocycle: trivial at t=0, the "
            "chosen gerbe at t=1, additive in t");
  auto sphere = cech::CoverNerve::boundary(4);
  cech::Cochain<cech::GaussianGroup> kappa;
  kappa.degree = 2;
  for (const auto& s : sphere.simplices(2)) kappa.values[s] = GaussianRat(Rat(0));
  kappa.values[{0, 1, 2}] = GaussianRat(Rat(1, 2));

  auto beta0 = cech::torsor_path(sphere, kappa, Rat(0));
  b.check("beta_0_trivial", cech::is_zero(beta0), true, "zero cocycle at the section end");

  auto beta1 = cech::torsor_path(sphere, kappa, Rat(1));
  auto generator = cech::zero_cochain<cech::ModZGroup>(sphere, 2);
  generator.values[{0, 1, 2}] = GaussianRat(Rat(1, 2));
  b.check("beta_1_hits_the_gerbe", cech::equal(beta1, generator), true,
          "kappa is a lift of the gerbe");

  cech::Cochain<cech::GaussianGroup> integral;
  integral.degree = 2;
  for (const auto& s : sphere.simplices(2)) integral.values[s] = GaussianRat(Rat(3));
  b.check("integral_kappa_trivial_at_1", cech::is_zero(cech::torsor_path(sphere, integral, Rat(1))),
          true, "the kernel of the exponential is Z");

  std::mt19937_64 rng(424242);
  bool additive = true;
  for (int rep = 0; rep < 100 && additive; ++rep) {
    Rat s = random_rat(rng), t = random_rat(rng);
    auto lhs = cech::add(cech::torsor_path(sphere, kappa, s), cech::torsor_path(sphere, kappa, t));
    additive = cech::equal(lhs, cech::torsor_path(sphere, kappa, s + t));
  }
  b.check("additivity_100_pairs", additive, true, "group law of Q(i)/Z");
  return b.take();
}

inline ScenarioReport scenario_incidence_bound() {
  Builder b("incidence-bound",
            "Dimension of the same-singular-fiber incidence locus and the removable-"
            "singularities bound for fourfolds");
  Int dim = fibers::incidence_dimension(2, 1, 2);
  b.check("fourfold_incidence", io::to_json(dim), 5, "1 + 2*2");
  b.check("bound_ok", fibers::bm_bound_ok(dim, 4), true, "5 <= n+1 with n = 4");
  b.check("elliptic_surface_sanity", io::to_json(fibers::incidence_dimension(1, 0, 1)), 2,
          "points in one singular fiber");
  b.check("zero_dimensional_fibers", io::to_json(fibers::incidence_dimension(2, 1, 0)), 1,
          "discriminant only");
  return b.take();
}

inline ScenarioReport scenario_mukai_dimension() {
  Builder b("mukai-dimension",
            "Moduli dimension (v,v)+2 = 4 for every twist degree of the abelian-surface "
            "fibration");
  mukai::K3Surface s(lattice::BilinearLattice(Mat<Int>{{2}}));
  json dims = json::array();
  bool all4 = true;
  for (int d = -3; d <= 3; ++d) {
    Int dim = mukai::moduli_dimension(s, {0, {1}, Int(d) - 1});
    dims.push_back(io::to_json(dim));
    all4 = all4 && dim == 4;
  }
  b.check("dimension_4_for_d_-3..3", all4, true, "only the degree-squared term survives");
  b.check("dims", dims, json::array({4, 4, 4, 4, 4, 4, 4}), "exact pairing");
  b.check("point_moduli", io::to_json(mukai::moduli_dimension(s, {1, {0}, 1})), 0,
          "(v,v) = -2");
  return b.take();
}

inline ScenarioReport scenario_cross_ratio() {
  Builder b("cross-ratio",
            "Cross-ratio of four distinct points of P^1: the reference value, Moebius "
            "invariance, and avoidance of {0, 1, infinity}");
  using fibers::ProjectivePoint;
  Rat ref = fibers::cross_ratio(ProjectivePoint::affine(Rat(0)), ProjectivePoint::infinity(),
                                ProjectivePoint::affine(Rat(1)), ProjectivePoint::affine(Rat(2)));
  b.check("reference", io::to_json(ref), "1/2", "f(z) = z evaluated at 1/2");

  std::mt19937_64 rng(987654321);
  bool invariant = true, avoids = true;
  int cases = 0;
  while (cases < 1000) {
    std::vector<fibers::ProjectivePoint> pts;
    while (pts.size() < 4) {
      auto p = random_point(rng);
      bool dup = false;
      for (const auto& q : pts) dup = dup || p == q;
      if (!dup) pts.push_back(p);
    }
    Rat a = random_rat(rng), bb = random_rat(rng), c = random_rat(rng), d = random_rat(rng);
    if (a * d - bb * c == 0) continue;
    ++cases;
    Rat lam = fibers::cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    avoids = avoids && lam != 0 && lam != 1;
    auto moebius = [&](const fibers::ProjectivePoint& p) {
      return fibers::ProjectivePoint(a * p.x + bb * p.y, c * p.x + d * p.y);
    };
    Rat lam2 = fibers::cross_ratio(moebius(pts[0]), moebius(pts[1]), moebius(pts[2]), moebius(pts[3]));
    invariant = invariant && lam == lam2;
  }
  b.check("moebius_invariance_1000", invariant, true, "random fractional-linear maps");
  b.check("avoids_degenerate_values", avoids, true, "Pluecker identity on 2x2 determinants");
  return b.take();
}

inline ScenarioReport scenario_specseq_conservation() {
  Builder b("specseq-conservation",
            "The signed rank total of a page is preserved by every legal differential "
            "assignment");
  std::mt19937_64 rng(1357911);
  std::uniform_int_distribution<int> rank_dist(0, 4);
  std::uniform_int_distribution<int> r_dist(2, 4);
  bool conserved = true;
  int cases = 0;
  while (cases < 500) {
    specseq::Page p;
    p.r = r_dist(rng);
    p.width = 5;
    p.height = 5;
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j) p.entries[{i, j}] = rank_dist(rng);
    specseq::DifferentialAssignment d;
    d.r = p.r;
    std::map<specseq::Cell, Int> capacity = p.entries;
    for (const auto& [cell, rank] : p.entries) {
      auto tgt = specseq::target_of(cell, d.r);
      if (!p.in_box(tgt.first, tgt.second)) continue;
      Int room = std::min(capacity[cell], capacity[tgt]);
      if (room <= 0) continue;
      std::uniform_int_distribution<long long> pick(0, static_cast<long long>(room));
      Int use = pick(rng);
      if (use == 0) continue;
      d.ranks[cell] = use;
      capacity[cell] -= use;
      capacity[tgt] -= use;
    }
    ++cases;
    auto q = specseq::next_page(p, d);
    conserved = conserved && specseq::euler_characteristic(p) == specseq::euler_characteristic(q);
  }
  b.check("euler_conserved_500_cases", conserved, true,
          "differentials cancel ranks in opposite parities");
  return b.take();
}

// ---------------------------------------------------------------- registry

struct ScenarioEntry {
  std::string id;
  std::function<ScenarioReport()> run;
};

inline const std::vector<ScenarioEntry>& registry() {
  static const std::vector<ScenarioEntry> entries = {
      {"picard-z0-z1", scenario_picard_z0_z1},
      {"picard-tritangent", scenario_picard_tritangent},
      {"pluecker-sextic", scenario_pluecker_sextic},
      {"euler-324", scenario_euler_324},
      {"leray-O", scenario_leray_o},
      {"koszul-vanishing", scenario_koszul_vanishing},
      {"gerbe-cocycle", scenario_gerbe_cocycle},
      {"torsor-path", scenario_torsor_path},
      {"incidence-bound", scenario_incidence_bound},
      {"mukai-dimension", scenario_mukai_dimension},
      {"cross-ratio", scenario_cross_ratio},
      {"specseq-conservation", scenario_specseq_conservation},
  };
  return entries;
}

inline std::vector<std::string> list_scenarios() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

inline std::optional<ScenarioReport> run_scenario(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e.run();
  return std::nullopt;
}

}  // namespace moduli::scenarios
