#include <doctest.h>

#include <stdexcept>

#include <set>

#include "sgm/enumerate.hpp"
#include "sgm/multigraph.hpp"

using namespace sgm;

TEST_CASE("canonical_form examples") {
  Multigraph path_abc(3, {{0, 1, 1}, {1, 2, 1}});
  Multigraph path_bca(3, {{1, 2, 1}, {2, 0, 1}});
  CHECK(canonical_form(path_abc) == canonical_form(path_bca));

  Multigraph dbl(2, {{0, 1, 2}});
  Multigraph two_edges(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK(canonical_form(dbl) != canonical_form(two_edges));

  Multigraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Multigraph tri_pendant(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 1}});
  CHECK(canonical_form(c4) != canonical_form(tri_pendant));
}

TEST_CASE("canonical_form ignores isolated vertices and edge direction") {
  Multigraph a(3, {{0, 1, 2}});
  Multigraph b(5, {{4, 2, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
  Multigraph star(3, {{0, 1, 1}, {0, 2, 1}});
  CHECK(canonical_form(star) == canonical_form(star.with_reversed_group(0)));
}

TEST_CASE("enumerate_multigraphs counts") {
  CHECK(enumerate_multigraphs(1).size() == 1);
  CHECK(enumerate_multigraphs(2).size() == 3);
  CHECK(enumerate_multigraphs(3).size() == 8);
  CHECK(enumerate_multigraphs(4).size() == 23);
  CHECK(enumerate_multigraphs(6).size() == 212);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic with d edges") {
  for (int d = 1; d <= 5; ++d) {
    std::set<CanonicalKey> keys;
    for (const auto& g : enumerate_multigraphs(d)) {
      CHECK(g.edge_count() == d);
      CHECK(g.non_isolated_count() == g.n_vertices());
      keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == enumerate_multigraphs(d).size());
  }
}

TEST_CASE("relabeling preserves the key") {
  for (const auto& g : enumerate_multigraphs(4)) {
    std::vector<int> rev(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i) rev[i] = g.n_vertices() - 1 - i;
    CHECK(canonical_form(g.relabeled(rev, g.n_vertices())) == canonical_form(g));
  }
}

TEST_CASE("double_graph examples") {
  CHECK(double_graph(Multigraph(2, {{0, 1, 1}})) == Multigraph(2, {{0, 1, 2}}));
  Multigraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  Multigraph tri2 = double_graph(tri);
  CHECK(tri2.edge_count() == 6);
  CHECK(tri2.multiplicity(0, 1) == 2);
  CHECK(tri2.multiplicity(1, 2) == 2);
  CHECK(tri2.multiplicity(0, 2) == 2);
  CHECK(double_graph(Multigraph(2, {{0, 1, 2}})).multiplicity(0, 1) == 4);
}

TEST_CASE("components and unions") {
  Multigraph u = disjoint_union(Multigraph(2, {{0, 1, 1}}), Multigraph(3, {{0, 1, 1}, {1, 2, 1}}));
  CHECK(u.n_vertices() == 5);
  CHECK(components(u).size() == 2);
  CHECK_FALSE(u.is_connected_ignoring_isolated());
  CHECK(u.degrees() == std::vector<int>{1, 1, 1, 2, 1});
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1, 0}}), std::invalid_argument);
}
