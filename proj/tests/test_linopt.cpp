#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sgm/cone.hpp"
#include "sgm/discriminant.hpp"
#include "sgm/enumerate.hpp"
#include "sgm/simplex.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;

TEST_CASE("lp_feasible examples") {
  auto r1 = lp_feasible(RatMatrix::identity(2), {1, 2});
  REQUIRE(r1.feasible);
  CHECK(r1.lambda == RatVector{1, 2});

  RatMatrix col = RatMatrix::from_rows({{1}, {1}});
  auto r2 = lp_feasible(col, {1, -1});
  REQUIRE_FALSE(r2.feasible);
  CHECK(is_farkas_vector(col, {1, -1}, r2.farkas));

  auto r3 = lp_feasible(col, {0, 0});
  REQUIRE(r3.feasible);
  CHECK(r3.lambda == RatVector{0});
}

TEST_CASE("lp_feasible on a redundant system") {
  RatMatrix a = RatMatrix::from_rows({{1, 2, 0}, {2, 4, 0}, {0, 1, 1}});
  RatVector b{3, 6, 2};
  auto r = lp_feasible(a, b);
  REQUIRE(r.feasible);
  CHECK(is_feasible_point(a, b, r.lambda));
  auto bad = lp_feasible(a, {3, 5, 2});
  REQUIRE_FALSE(bad.feasible);
  CHECK(is_farkas_vector(a, {3, 5, 2}, bad.farkas));
}

TEST_CASE("cone membership of a single double edge") {
  Multigraph dbl(2, {{0, 1, 2}});
  SymPoly target = symmetrized_graph_monomial(dbl, 4);
  auto r = cone_membership(target, 2, 4);
  REQUIRE(r.member);
  REQUIRE(r.certificate.terms.size() == 1);
  CHECK(r.certificate.terms[0].weight == 1);
  CHECK(r.certificate.terms[0].generator.key == canonical_form(dbl));
  CHECK(verify_cone_certificate(target, r.certificate));
}

TEST_CASE("cone membership of the cubic Vandermonde square") {
  SymPoly target = disc_nk(3, 0);
  auto r = cone_membership(target, 6, 3);
  REQUIRE(r.member);
  REQUIRE(r.certificate.terms.size() == 1);
  CHECK(r.certificate.terms[0].weight == Rational(1, 6));
  Multigraph tri2(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
  CHECK(r.certificate.terms[0].generator.key == canonical_form(tri2));
}

TEST_CASE("negated squares are separated by a Farkas vector") {
  SymPoly target = symmetrized_graph_monomial(Multigraph(2, {{0, 1, 2}}), 4) * Rational(-1);
  auto r = cone_membership(target, 2, 4);
  REQUIRE_FALSE(r.member);
  CHECK(verify_cone_farkas(target, square_generators(2, 4), r.coordinates, r.farkas));
}

TEST_CASE("the 4-star class lies outside the square cone at n = 8") {
  Multigraph star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  SymPoly target = symmetrized_graph_monomial(star, 8);
  auto gens = square_generators(4, 8);
  for (Rational sign : {Rational(1), Rational(-1)}) {
    auto r = cone_membership(target * sign, 4, 8);
    REQUIRE_FALSE(r.member);
    CHECK(verify_cone_farkas(target * sign, gens, r.coordinates, r.farkas));
  }
}

TEST_CASE("cone membership is deterministic") {
  SymPoly target = disc_nk(4, 1);
  auto a = cone_membership(target, 6, 4);
  auto b = cone_membership(target, 6, 4);
  REQUIRE(a.member == b.member);
  REQUIRE(a.certificate.terms.size() == b.certificate.terms.size());
  for (size_t i = 0; i < a.certificate.terms.size(); ++i) {
    CHECK(a.certificate.terms[i].weight == b.certificate.terms[i].weight);
    CHECK(a.certificate.terms[i].generator.key == b.certificate.terms[i].generator.key);
  }
}

TEST_CASE("square generators") {
  auto g = square_generators(4, 8);
  CHECK(g.size() == 3);
  for (const auto& s : g) CHECK_FALSE(s.poly.is_zero());
  CHECK_THROWS_AS(cone_membership(SymPoly(8, 3), 3, 8), std::invalid_argument);
}
