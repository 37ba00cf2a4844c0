#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "sgm/discriminant.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;
using testing::x;

namespace {
// sum over i<j of (x_i - x_j)^2 in n variables
SymPoly pair_sum(int n) {
  Poly p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p += testing::diff_sq(n, i, j);
  return from_symmetric_poly(p);
}

Rational vandermonde_sq(const std::vector<Rational>& r) {
  Rational v = 1;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j) v *= (r[i] - r[j]) * (r[i] - r[j]);
  return v;
}
}  // namespace

TEST_CASE("derivative_k examples") {
  TPoly p2 = root_polynomial(2);
  TPoly same = derivative_k(p2, 0);
  CHECK(same.coeffs == p2.coeffs);

  TPoly d31 = derivative_k(root_polynomial(3), 1);
  REQUIRE(d31.degree() == 2);
  Poly e1 = x(4, 1), e2 = x(4, 2);
  CHECK(d31.coeffs[2] == Poly::constant(4, 3));
  CHECK(d31.coeffs[1] == -(Poly::constant(4, 2) * e1));
  CHECK(d31.coeffs[0] == e2);

  TPoly d42 = derivative_k(root_polynomial(4), 2);
  REQUIRE(d42.degree() == 2);
  Poly f1 = x(5, 1), f2 = x(5, 2);
  CHECK(d42.coeffs[2] == Poly::constant(5, 12));
  CHECK(d42.coeffs[1] == -(Poly::constant(5, 6) * f1));
  CHECK(d42.coeffs[0] == Poly::constant(5, 2) * f2);
  CHECK_THROWS_AS(derivative_k(root_polynomial(3), 2), std::invalid_argument);
}

TEST_CASE("resultant examples") {
  // f = t - a, g = t - b over Q[a, b]
  TPoly f{{-x(2, 0), Poly::constant(2, 1)}};
  TPoly g{{-x(2, 1), Poly::constant(2, 1)}};
  CHECK(resultant_sylvester(f, g) == x(2, 0) - x(2, 1));
  CHECK(resultant_sylvester(f, f).is_zero());

  TPoly q = root_polynomial(2);
  Poly e1 = x(3, 1), e2 = x(3, 2);
  CHECK(discriminant(q) == e1 * e1 - Poly::constant(3, 4) * e2);
}

TEST_CASE("disc_nk small cases") {
  CHECK(disc_nk(2, 0) == testing::sym(2, 2, {{{2}, 1}, {{1, 1}, -2}}));
  CHECK(disc_nk(3, 1) == pair_sum(3) * Rational(2));
  CHECK_THROWS_AS(disc_nk(3, 2), std::invalid_argument);
}

TEST_CASE("disc_nk(n, 0) is the squared Vandermonde") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int n : {3, 4}) {
    SymPoly dsc = disc_nk(n, 0);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> r;
      for (int i = 0; i < n; ++i) {
        int a = num(rng);
        r.push_back(make_rational(a, den(rng)));
      }
      CHECK(dsc.evaluate(r) == vandermonde_sq(r));
    }
    std::vector<Rational> repeated(n, Rational(0));
    for (int i = 0; i < n; ++i) repeated[i] = i;
    repeated[1] = repeated[0];
    CHECK(dsc.evaluate(repeated) == 0);
  }
}

TEST_CASE("doubled complete graph is n! times the Vandermonde square") {
  for (int n : {3, 4}) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) es.push_back({i, j, 2});
    SymPoly g = symmetrized_graph_monomial(Multigraph(n, es), n);
    CHECK(g == disc_nk(n, 0) * Rational(factorial(n)));
  }
}

TEST_CASE("disc_nk shape") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      SymPoly dsc = disc_nk(n, k);
      CHECK(dsc.degree() == (n - k) * (n - k - 1));
      CHECK(is_translation_invariant(dsc));
    }
}

TEST_CASE("D_{k+2,k} is a multiple of the pairwise square sum") {
  for (int k = 0; k <= 3; ++k) {
    Rational ck = Rational(factorial(k + 1) * factorial(k));
    CHECK(disc_nk(k + 2, k) == pair_sum(k + 2) * ck);
  }
}

TEST_CASE("disc_nk agrees with the discriminant of the evaluated derivative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      SymPoly dsc = disc_nk(n, k);
      TPoly dk = in_roots(derivative_k(root_polynomial(n), k), n);
      Poly direct = discriminant(dk);
      for (int t = 0; t < 3; ++t) {
        std::vector<Rational> r;
        for (int i = 0; i < n; ++i) r.push_back(num(rng));
        CHECK(dsc.evaluate(r) == direct.evaluate(r));
      }
    }
}
