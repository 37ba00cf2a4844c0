#include <doctest.h>

#include <stdexcept>

#include "sgm/bases.hpp"
#include "sgm/enumerate.hpp"
#include "sgm/ratmatrix.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;

namespace {
std::vector<Partition> parts_of(const std::vector<TwoPartition>& v) {
  std::vector<Partition> out;
  for (const auto& t : v) out.push_back(t.parts());
  return out;
}
}  // namespace

TEST_CASE("two_partitions_ordered examples") {
  CHECK(parts_of(two_partitions_ordered(4)) == std::vector<Partition>{{4}, {2, 2}});
  CHECK(parts_of(two_partitions_ordered(6)) == std::vector<Partition>{{3, 3}, {6}, {4, 2}, {2, 2, 2}});
  CHECK(parts_of(two_partitions_ordered(5)) == std::vector<Partition>{{5}, {3, 2}});
  CHECK(two_partitions_ordered(8).size() == 7);
  CHECK_THROWS_AS(TwoPartition({3, 1}), std::invalid_argument);
}

TEST_CASE("precedes is a strict total order on 2-partitions") {
  auto v = two_partitions_ordered(8);
  for (size_t i = 0; i < v.size(); ++i) {
    CHECK_FALSE(precedes(v[i], v[i]));
    for (size_t j = i + 1; j < v.size(); ++j) {
      CHECK(precedes(v[i], v[j]));
      CHECK_FALSE(precedes(v[j], v[i]));
    }
  }
}

TEST_CASE("partition_graph examples") {
  CHECK(canonical_form(partition_graph(TwoPartition({2}))) == canonical_form(Multigraph(3, {{0, 1, 1}, {0, 2, 1}})));
  Multigraph two_stars(6, {{0, 1, 1}, {0, 2, 1}, {3, 4, 1}, {3, 5, 1}});
  CHECK(canonical_form(partition_graph(TwoPartition({2, 2}))) == canonical_form(two_stars));
  Multigraph g42 = partition_graph(TwoPartition({4, 2}));
  CHECK(g42.edge_count() == 6);
  CHECK(components(g42).size() == 2);
}

TEST_CASE("square_graph examples") {
  CHECK(canonical_form(square_graph(TwoPartition({2}))) == canonical_form(Multigraph(2, {{0, 1, 2}})));
  Multigraph glued(4, {{0, 1, 2}, {0, 2, 2}, {1, 3, 2}});
  CHECK(canonical_form(square_graph(TwoPartition({3, 3}))) == canonical_form(glued));
  Multigraph h42(5, {{0, 1, 2}, {0, 2, 2}, {3, 4, 2}});
  CHECK(canonical_form(square_graph(TwoPartition({4, 2}))) == canonical_form(h42));
}

TEST_CASE("partition-graph coefficient lemma at d = 4") {
  const int n = 8;
  auto order = two_partitions_ordered(4);
  for (const auto& a : order) {
    SymPoly b = symmetrized_graph_monomial(partition_graph(a), n);
    for (const auto& beta : order) {
      Rational expect = a == beta ? Rational(repetition_factorial(a)) : Rational(0);
      CHECK(normalized_coeff(b, beta.parts()) == expect);
    }
  }
}

TEST_CASE("square-graph coefficient lemma for even parts") {
  for (int d : {2, 4}) {
    for (const auto& a : two_partitions_ordered(d)) {
      SymPoly h = symmetrized_graph_monomial(square_graph(a), 2 * d);
      CHECK(normalized_coeff(h, a.parts()) == printed_square_coefficient(a));
    }
  }
}

TEST_CASE("change of basis matrices") {
  auto m2 = change_of_basis_matrix(2, 4);
  REQUIRE(m2.entries.size() == 1);
  CHECK(m2.entries[0][0] == 2);

  auto m4 = change_of_basis_matrix(4, 8);
  REQUIRE(m4.entries.size() == 2);
  CHECK(m4.vanishes_before_diagonal());
  CHECK(m4.diagonal(1) == 4);
  RatMatrix e = RatMatrix::from_rows(m4.entries), inv = RatMatrix::from_rows(m4.inverse);
  CHECK(e * inv == RatMatrix::identity(2));
  CHECK_THROWS_AS(change_of_basis_matrix(4, 7), std::invalid_argument);
}

TEST_CASE("partition graphs span the translation-invariant space at d = 4") {
  const int n = 8;
  auto order = two_partitions_ordered(4);
  for (const auto& g : enumerate_multigraphs(4)) {
    SymPoly s = symmetrized_graph_monomial(g, n);
    auto c = partition_graph_coordinates(s, order);
    SymPoly back(n, 4);
    for (size_t i = 0; i < order.size(); ++i) {
      SymPoly b = symmetrized_graph_monomial(partition_graph(order[i]), n);
      back += b * c[i];
    }
    CHECK(back == s);
  }
}
