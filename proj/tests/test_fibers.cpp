#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "moduli/fibers.hpp"
#include "oracles.hpp"

using namespace moduli;
using namespace moduli::fibers;

namespace {
ProjectivePoint pt(long long num, long long den = 1) {
  return ProjectivePoint::affine(Rat(num, den));
}
}  // namespace

TEST_CASE("cross-ratio reference values") {
  CHECK(cross_ratio(pt(0), ProjectivePoint::infinity(), pt(1), pt(2)) == Rat(1, 2));
  CHECK(cross_ratio(pt(0), ProjectivePoint::infinity(), pt(7, 3), pt(1)) == Rat(7, 3));
  CHECK(cross_ratio(pt(1), pt(3), pt(2), pt(4)) == Rat(-1, 3));
  CHECK_THROWS_AS(cross_ratio(pt(0), pt(0), pt(1), pt(2)), input_error);
}

TEST_CASE("cross-ratio avoids 0, 1, infinity and is a Moebius invariant") {
  std::mt19937_64 rng(707);
  int cases = 0;
  while (cases < 300) {
    std::vector<ProjectivePoint> p;
    while (p.size() < 4) {
      ProjectivePoint cand = (rng() % 8 == 0)
                                 ? ProjectivePoint::infinity()
                                 : ProjectivePoint::affine(testgen::random_rat(rng));
      bool dup = false;
      for (const auto& q : p) dup = dup || cand == q;
      if (!dup) p.push_back(cand);
    }
    Rat a = testgen::random_rat(rng), b = testgen::random_rat(rng);
    Rat c = testgen::random_rat(rng), d = testgen::random_rat(rng);
    if (a * d - b * c == 0) continue;
    ++cases;
    Rat lambda = cross_ratio(p[0], p[1], p[2], p[3]);
    CHECK(lambda != 0);
    CHECK(lambda != 1);
    auto apply = [&](const ProjectivePoint& q) {
      return ProjectivePoint(a * q.x + b * q.y, c * q.x + d * q.y);
    };
    CHECK(cross_ratio(apply(p[0]), apply(p[1]), apply(p[2]), apply(p[3])) == lambda);
  }
}

TEST_CASE("fiber models carry the expected strata") {
  auto t1 = type1_smooth();
  CHECK(t1.strata.size() == 1);
  CHECK(std::holds_alternative<GlueNone>(t1.gluing));

  auto t2 = type2_nodal();
  CHECK(t2.strata.size() == 2);
  CHECK(std::holds_alternative<GlueTranslationByPMinusQ>(t2.gluing));

  auto t3 = type3_cuspidal();
  CHECK(t3.strata.size() == 2);
  CHECK(std::holds_alternative<GlueContractAlongSInfinity>(t3.gluing));

  auto t4 = type4_binodal(pt(0), ProjectivePoint::infinity(), pt(1), pt(2));
  REQUIRE(std::holds_alternative<GlueCrossRatio>(t4.gluing));
  CHECK(std::get<GlueCrossRatio>(t4.gluing).lambda == Rat(1, 2));
  std::vector<Int> eulers;
  for (const auto& [name, e] : t4.strata) eulers.push_back(e);
  CHECK(eulers == std::vector<Int>{0, 0, 0, 1});

  CHECK_THROWS_AS(type4_binodal(Rat(0)), input_error);
  CHECK_THROWS_AS(type4_binodal(Rat(1)), input_error);
  CHECK_THROWS_AS(build_fiber_model(FiberKind::Type4Binodal), input_error);
}

TEST_CASE("fiber Euler characteristics are 0,0,0,1") {
  CHECK(fiber_euler(type1_smooth()) == 0);
  CHECK(fiber_euler(type2_nodal()) == 0);
  CHECK(fiber_euler(type3_cuspidal()) == 0);
  CHECK(fiber_euler(type4_binodal(Rat(1, 2))) == 1);
}

TEST_CASE("type-4 Euler characteristic matches the cell-count oracle") {
  CHECK(fiber_euler(type4_binodal(Rat(5, 3))) == oracle::type4_euler_by_cells());
}

TEST_CASE("total Euler characteristic of the fibration") {
  auto strat = curves::stratify_sextic();
  CHECK(total_euler(strat, standard_fiber_models()) == 324);

  std::map<int, FiberModel> all_smooth;
  for (int t = 1; t <= 4; ++t) all_smooth.emplace(t, type1_smooth());
  CHECK(total_euler(strat, all_smooth) == 0);

  curves::LinearSystemStratification hypothetical;
  hypothetical.strata.push_back({1, 2, std::string("generic"), 1});
  hypothetical.strata.push_back({2, 1, std::string("curve"), 0});
  hypothetical.strata.push_back({3, 0, Int(0), 0});
  hypothetical.strata.push_back({4, 0, Int(2), 2});
  CHECK(total_euler(hypothetical, standard_fiber_models()) == 2);

  std::map<int, FiberModel> missing{{1, type1_smooth()}};
  CHECK_THROWS_AS(total_euler(strat, missing), input_error);
}

TEST_CASE("total Euler characteristic ignores the zero-chi strata") {
  std::mt19937_64 rng(808);
  auto models = standard_fiber_models();
  for (int rep = 0; rep < 50; ++rep) {
    curves::LinearSystemStratification strat = curves::stratify_sextic();
    for (int t = 0; t < 3; ++t) strat.strata[t].base_euler = testgen::random_int(rng, 500);
    CHECK(total_euler(strat, models) == 324);
  }
}

TEST_CASE("degree shift preserves the model") {
  std::mt19937_64 rng(909);
  auto models = standard_fiber_models();
  for (const auto& [t, m] : models) {
    CHECK(degree_shift(m, 0) == m);
    CHECK(degree_shift(m, 5) == m);
    for (int rep = 0; rep < 10; ++rep) {
      Int d = testgen::random_int(rng, 100);
      CHECK(fiber_euler(degree_shift(m, d)) == fiber_euler(m));
    }
  }
}

TEST_CASE("autoduality fixes every model and commutes with shifts") {
  auto models = standard_fiber_models();
  for (const auto& [t, m] : models) {
    CHECK(dual_fiber_model(m) == m);
    CHECK(dual_fiber_model(dual_fiber_model(m)) == m);
    CHECK(dual_fiber_model(degree_shift(m, 7)) == degree_shift(dual_fiber_model(m), 7));
  }
  auto t2 = type2_nodal();
  CHECK(std::holds_alternative<GlueTranslationByPMinusQ>(dual_fiber_model(t2).gluing));
  auto t4 = type4_binodal(Rat(2, 7));
  CHECK(std::get<GlueCrossRatio>(dual_fiber_model(t4).gluing).lambda == Rat(2, 7));
}

TEST_CASE("incidence dimension and the removable-singularities bound") {
  CHECK(incidence_dimension(2, 1, 2) == 5);
  CHECK(bm_bound_ok(incidence_dimension(2, 1, 2), 4));
  CHECK(incidence_dimension(1, 0, 1) == 2);
  CHECK(incidence_dimension(2, 1, 0) == 1);
  CHECK_FALSE(bm_bound_ok(6, 4));
  CHECK_THROWS_AS(incidence_dimension(-1, 0, 0), input_error);
  CHECK_THROWS_AS(incidence_dimension(1, 2, 0), input_error);
}
