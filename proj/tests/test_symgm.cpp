#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sgm/enumerate.hpp"
#include "sgm/partition.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;
using testing::sym;
using testing::x;

TEST_CASE("graph_monomial examples") {
  CHECK(graph_monomial(Multigraph(2, {{0, 1, 1}})) == x(2, 0) - x(2, 1));
  CHECK(graph_monomial(Multigraph(2, {{0, 1, 2}})) == testing::diff_sq(2, 0, 1));
  Poly path = graph_monomial(Multigraph(3, {{0, 1, 1}, {1, 2, 1}}));
  CHECK(path == x(3, 0) * x(3, 1) - x(3, 0) * x(3, 2) - x(3, 1) * x(3, 1) + x(3, 1) * x(3, 2));
}

TEST_CASE("symmetrized_graph_monomial examples") {
  CHECK(symmetrized_graph_monomial(Multigraph(2, {{0, 1, 1}}), 2).is_zero());
  CHECK(symmetrized_graph_monomial(Multigraph(2, {{0, 1, 2}}), 3) == sym(3, 2, {{{2}, 4}, {{1, 1}, -4}}));
  SymPoly path = symmetrized_graph_monomial(Multigraph(3, {{0, 1, 1}, {1, 2, 1}}), 3);
  CHECK(path == sym(3, 2, {{{2}, -2}, {{1, 1}, 2}}));
  std::vector<Rational> pt{2, 1, 0};
  CHECK(path.evaluate(pt) == -6);
}

TEST_CASE("isolated vertices do not change the symmetrization") {
  CHECK(symmetrized_graph_monomial(Multigraph(5, {{3, 4, 2}}), 3) ==
        symmetrized_graph_monomial(Multigraph(2, {{0, 1, 2}}), 3));
  CHECK_THROWS_AS(symmetrized_graph_monomial(Multigraph(3, {{0, 1, 1}, {1, 2, 1}}), 2), std::invalid_argument);
}

TEST_CASE("coeff_by_coloring examples") {
  Multigraph dbl(2, {{0, 1, 2}});
  CHECK(coeff_by_coloring(dbl, {2}, 2) == 2);
  CHECK(coeff_by_coloring(dbl, {2}, 3) == 4);
  CHECK(coeff_by_coloring(Multigraph(2, {{0, 1, 1}}), {1}, 2) == 0);
  auto cnt = count_partition_colorings(dbl, {2});
  CHECK(cnt.positive == 2);
  CHECK(cnt.negative == 0);
}

TEST_CASE("coloring count agrees with expansion for every graph with up to 4 edges") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& g : enumerate_multigraphs(d)) {
      int n = g.n_vertices() + 1;
      SymPoly s = symmetrized_graph_monomial(g, n);
      for (const auto& a : partitions_of(d, n)) CHECK(coeff_by_coloring(g, a, n) == coeff_of(s, a));
    }
}

TEST_CASE("every symmetrized graph monomial is translation invariant") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& g : enumerate_multigraphs(d))
      CHECK(is_translation_invariant(symmetrized_graph_monomial(g, 2 * d)));
}

TEST_CASE("q_covariant examples") {
  CHECK(q_covariant(Multigraph(2, {{0, 1, 1}}), 2).is_zero());
  Poly e0 = x(3, 0), e1 = x(3, 1), e2 = x(3, 2);
  CHECK(q_covariant(Multigraph(2, {{0, 1, 2}}), 2) ==
        ElemPoly(2, Poly::constant(3, 2) * e1 * e1 - Poly::constant(3, 8) * e0 * e2));
  Multigraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  ElemPoly q = q_covariant(c4, 4);
  REQUIRE_FALSE(q.is_zero());
  CHECK(q.poly.homogeneous_degree() == 4);
}
