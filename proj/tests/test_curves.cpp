#include <catch2/catch_amalgamated.hpp>

#include "moduli/plane_curves.hpp"

using namespace moduli;
using namespace moduli::curves;

TEST_CASE("dual degree") {
  CHECK(dual_degree({6, 0, 0}) == 30);
  CHECK(dual_degree({3, 0, 0}) == 6);
  CHECK(dual_degree({2, 0, 0}) == 2);
  CHECK_THROWS_AS(dual_degree({1, 0, 0}), input_error);
}

TEST_CASE("dual cusps are flexes") {
  CHECK(dual_cusps({6, 0, 0}) == 72);
  CHECK(dual_cusps({3, 0, 0}) == 9);
  CHECK(dual_cusps({2, 0, 0}) == 0);
  // genus-0 quintic with six cusps: 45 - 48 < 0 exposes bad data
  CHECK_THROWS_AS(dual_cusps({5, 0, 6}), input_error);
}

TEST_CASE("dual nodes are bitangents, smooth input only") {
  CHECK(dual_nodes({6, 0, 0}) == 324);
  CHECK(dual_nodes({4, 0, 0}) == 28);
  CHECK(dual_nodes({3, 0, 0}) == 0);
  CHECK_THROWS_AS(dual_nodes({6, 1, 0}), input_error);
}

TEST_CASE("geometric genus") {
  CHECK(geometric_genus({6, 0, 0}) == 10);
  CHECK(geometric_genus({30, 324, 72}) == 10);
  CHECK(geometric_genus({2, 0, 0}) == 0);
  CHECK_THROWS_AS(geometric_genus({3, 2, 0}), input_error);
}

TEST_CASE("euler characteristic of a nodal-cuspidal curve") {
  CHECK(nodal_curve_euler({30, 324, 72}) == -342);
  CHECK(nodal_curve_euler({2, 0, 0}) == 2);
  CHECK(nodal_curve_euler({3, 1, 0}) == 1);
}

TEST_CASE("biduality of the smooth sextic") {
  PlaneCurveClass sextic{6, 0, 0};
  PlaneCurveClass dual = dual_curve(sextic);
  CHECK(dual == PlaneCurveClass{30, 324, 72});
  CHECK(dual_degree(dual) == 6);
  CHECK(geometric_genus(dual) == geometric_genus(sextic));
}

TEST_CASE("stratification of the sextic linear system") {
  auto s = stratify_sextic();
  REQUIRE(s.strata.size() == 4);
  CHECK(s.strata[0].base_dimension == 2);
  CHECK(s.strata[1].base_dimension == 1);
  CHECK(s.strata[2].base_dimension == 0);
  CHECK(s.strata[3].base_dimension == 0);
  CHECK(std::get<Int>(s.strata[2].count) == 72);
  CHECK(std::get<Int>(s.strata[3].count) == 324);
  CHECK(s.strata[0].base_euler == 345);
  CHECK(s.strata[1].base_euler == -738);
  CHECK(s.strata[2].base_euler == 72);
  CHECK(s.strata[3].base_euler == 324);
  CHECK(s.base_euler_sum() == 3);
}

TEST_CASE("branch point count determines the genus of the double cover") {
  CHECK(branch_genus(6) == 2);
  CHECK(branch_genus(4) == 1);
  CHECK(branch_genus(2) == 0);
  CHECK_THROWS_AS(branch_genus(5), input_error);
  CHECK_THROWS_AS(branch_genus(-2), input_error);
}
