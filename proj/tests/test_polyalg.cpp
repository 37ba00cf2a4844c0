#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "sgm/elementary.hpp"
#include "sgm/partition.hpp"
#include "sgm/sympoly.hpp"

using namespace sgm;
using testing::sym;
using testing::x;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(Rational(1, 6)) == "1/6");
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("partitions") {
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(6, 2).size() == 4);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(to_partition({0, 2, 1, 2}) == Partition{2, 2, 1});
  CHECK(multiplicity_factorial({2, 2, 1}) == 2);
  CHECK(padded_multiplicity_factorial({2, 2, 1}, 5) == 4);
  CHECK(parse_partition("3,3") == Partition{3, 3});
}

TEST_CASE("poly arithmetic") {
  Poly p = x(2, 0) - x(2, 1);
  Poly sq = p * p;
  CHECK(sq.coeff({2, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == -2);
  CHECK(sq == p.pow(2));
  CHECK(sq.homogeneous_degree() == 2);
  std::vector<Rational> pt{3, 1};
  CHECK(sq.evaluate(pt) == 4);
  auto q = exact_divide(sq, p);
  REQUIRE(q);
  CHECK(*q == p);
}

TEST_CASE("symmetrize_poly examples") {
  CHECK(symmetrize_poly(x(2, 0) - x(2, 1), 2).is_zero());
  CHECK(symmetrize_poly(testing::diff_sq(2, 0, 1), 2) == sym(2, 2, {{{2}, 2}, {{1, 1}, -4}}));
  CHECK(symmetrize_poly(testing::diff_sq(2, 0, 1), 3) == sym(3, 2, {{{2}, 4}, {{1, 1}, -4}}));
  CHECK(symmetrize_poly(x(1, 0) * x(1, 0), 3) == sym(3, 2, {{{2}, 2}}));
}

TEST_CASE("coeff_of examples") {
  SymPoly s = sym(2, 2, {{{2}, 2}, {{1, 1}, -4}});
  CHECK(coeff_of(s, {2, 0}) == 2);
  CHECK(coeff_of(s, {0, 2}) == 2);
  CHECK(coeff_of(SymPoly(2, 2), {1, 1}) == 0);
  CHECK(coeff_of(symmetrize_poly(testing::diff_sq(2, 0, 1), 3), {1, 1, 0}) == -4);
  CHECK_THROWS_AS(coeff_of(s, {3}), std::invalid_argument);
}

TEST_CASE("to_elementary examples") {
  Poly e1 = x(3, 1), e2 = x(3, 2);
  CHECK(to_elementary(sym(2, 2, {{{1, 1}, 1}})) == ElemPoly(2, e2));
  CHECK(to_elementary(sym(2, 2, {{{2}, 1}})) == ElemPoly(2, e1 * e1 - Poly::constant(3, 2) * e2));
  CHECK(to_elementary(symmetrize_poly(testing::diff_sq(2, 0, 1), 2)) ==
        ElemPoly(2, Poly::constant(3, 2) * e1 * e1 - Poly::constant(3, 8) * e2));
}

TEST_CASE("homogenize examples") {
  Poly e0 = x(3, 0), e1 = x(3, 1), e2 = x(3, 2);
  CHECK(homogenize(ElemPoly(2, e1 * e1 - Poly::constant(3, 2) * e2), 2) ==
        ElemPoly(2, e1 * e1 - Poly::constant(3, 2) * e0 * e2));
  CHECK(homogenize(ElemPoly(2, Poly::constant(3, 5)), 3) == ElemPoly(2, Poly::constant(3, 5) * e0.pow(3)));
  CHECK(homogenize(ElemPoly(2, e2 + e1), 2) == ElemPoly(2, e0 * e2 + e0 * e1));
  CHECK_THROWS_AS(homogenize(ElemPoly(2, e1 * e1 * e1), 2), std::invalid_argument);
}

TEST_CASE("elementary round trip on random symmetric polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      SymPoly s(n, d);
      for (const auto& p : partitions_of(d, n)) s.add_term(p, c(rng));
      ElemPoly e = to_elementary(s);
      CHECK(from_elementary(e) == s);
      CHECK(from_elementary(homogenize(e, d)) == s);
    }
}

TEST_CASE("expansion agrees with m-basis evaluation") {
  SymPoly s = sym(3, 4, {{{4}, 1}, {{2, 1, 1}, -3}, {{2, 2}, Rational(1, 2)}});
  Poly p = s.expand();
  std::vector<Rational> pt{2, Rational(-1, 3), 5};
  CHECK(p.evaluate(pt) == s.evaluate(pt));
  CHECK(from_symmetric_poly(p) == s);
}

TEST_CASE("translation invariance") {
  CHECK(is_translation_invariant(symmetrize_poly(testing::diff_sq(2, 0, 1), 2)));
  CHECK(is_translation_invariant(symmetrize_poly(testing::diff_sq(2, 0, 1), 3)));
  CHECK_FALSE(is_translation_invariant(sym(3, 1, {{{1}, 1}})));
  SymPoly m1 = sym(3, 1, {{{1}, 1}});
  CHECK(shift_coefficient(m1, 1) == sym(3, 0, {{{}, 3}}));
}

TEST_CASE("resymmetrize agrees with symmetrize_poly") {
  Poly p = testing::diff_sq(2, 0, 1);
  CHECK(resymmetrize(symmetrize_poly(p, 2), 3) == symmetrize_poly(p, 3) * Rational(2));
}
