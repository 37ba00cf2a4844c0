#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sgm/bases.hpp"
#include "sgm/positivity.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;
using testing::sym;

TEST_CASE("psd_check examples") {
  auto id = psd_check(RatMatrix::identity(3));
  CHECK(id.psd);
  CHECK(id.ldl.d == RatVector{1, 1, 1});

  auto bad = psd_check(RatMatrix::from_rows({{1, 2}, {2, 1}}));
  REQUIRE_FALSE(bad.psd);
  CHECK(bad.witness == RatVector{1, -1});
  CHECK(bad.witness_value == -2);

  auto zero = psd_check(RatMatrix(2, 2));
  CHECK(zero.psd);
  CHECK(zero.ldl.d == RatVector{0, 0});

  CHECK_THROWS_AS(psd_check(RatMatrix::from_rows({{1, 2}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("psd_check witnesses are self-validating") {
  RatMatrix q = RatMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, Rational(1, 4)}});
  auto r = psd_check(q);
  REQUIRE_FALSE(r.psd);
  CHECK(dot(r.witness, q * r.witness) == r.witness_value);
  CHECK(r.witness_value < 0);

  RatMatrix p = RatMatrix::from_rows({{4, 2, 0}, {2, 1, 0}, {0, 0, 3}});
  auto ok = psd_check(p);
  REQUIRE(ok.psd);
  for (const auto& v : ok.ldl.d) CHECK(v >= 0);
}

TEST_CASE("verify_sos examples") {
  SymPoly target = symmetrize_poly(testing::diff_sq(2, 0, 1), 2);  // 2(x1 - x2)^2
  SosCertificate good{{{1, 0}, {0, 1}}, RatMatrix::from_rows({{2, -2}, {-2, 2}}), 1};
  auto r = verify_sos(target, good);
  CHECK(r.ok);
  CHECK(r.scale == 1);

  SosCertificate wrong{{{1, 0}, {0, 1}}, RatMatrix::from_rows({{2, 0}, {0, 2}}), 1};
  CHECK_FALSE(verify_sos(target, wrong).ok);

  // x1^4 + x2^4 = v Q v^T with an indefinite Q
  SosCertificate indefinite{{{2, 0}, {1, 1}, {0, 2}}, RatMatrix::from_rows({{1, 0, 1}, {0, -2, 0}, {1, 0, 1}}), 1};
  SymPoly quartic = sym(2, 4, {{{4}, 1}});
  auto ind = verify_sos(quartic, indefinite);
  CHECK_FALSE(ind.ok);
  SosCertificate diag{{{2, 0}, {1, 1}, {0, 2}}, RatMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), 1};
  CHECK(verify_sos(quartic, diag).ok);
}

TEST_CASE("find_sos on a manifest square") {
  SymPoly target = symmetrize_poly(testing::diff_sq(2, 0, 1), 4);
  auto c = find_sos(target, 2);
  REQUIRE(c);
  CHECK(verify_sos(target, *c).ok);
}

TEST_CASE("find_sos on square graphs") {
  for (Partition p : {Partition{4}, Partition{2, 2}}) {
    SymPoly h = symmetrized_graph_monomial(square_graph(TwoPartition(p)), 8);
    auto c = find_sos(h, 5);
    REQUIRE(c);
    CHECK(verify_sos(h, *c).ok);
  }
}

TEST_CASE("certificates lift to one more variable") {
  SymPoly h = symmetrized_graph_monomial(square_graph(TwoPartition({4})), 5);
  auto c = find_sos(h, 5);
  REQUIRE(c);
  CHECK(verify_sos(h, *c).ok);
  SymPoly lifted = resymmetrize(restrict_symmetrization(h, 5).value(), 6);
  SosCertificate again = *c;
  again.scale = 0;
  CHECK(verify_sos(lifted, again).ok);
}

TEST_CASE("restrict_symmetrization inverts resymmetrize") {
  SymPoly s = symmetrized_graph_monomial(Multigraph(3, {{0, 1, 1}, {1, 2, 1}}), 3);
  auto back = restrict_symmetrization(resymmetrize(s, 6), 3);
  REQUIRE(back);
  CHECK(*back == s);
  CHECK_FALSE(restrict_symmetrization(sym(4, 4, {{{1, 1, 1, 1}, 1}}), 3));
}

TEST_CASE("sign_witness_search examples") {
  SymPoly path = sym(3, 2, {{{2}, -2}, {{1, 1}, 2}});
  auto r = sign_witness_search(path, 0);
  REQUIRE(r.negative_point);
  CHECK(path.evaluate(*r.negative_point) < 0);
  std::vector<Rational> pt{2, 1, 0};
  CHECK(path.evaluate(pt) == -6);
  CHECK_FALSE(r.witness);  // a negative semidefinite form never turns positive

  auto mixed = sign_witness_search(sym(3, 3, {{{3}, 1}}), 0);
  REQUIRE(mixed.witness);
  CHECK(mixed.witness->negative_value < 0);
  CHECK(mixed.witness->positive_value > 0);

  CHECK_FALSE(sign_witness_search(symmetrize_poly(testing::diff_sq(2, 0, 1), 3), 0).witness);
  CHECK_FALSE(sign_witness_search(SymPoly(3, 2), 0).witness);
}

TEST_CASE("sign battery is deterministic in the seed") {
  CHECK(sign_battery(4, 3) == sign_battery(4, 3));
  CHECK(sign_battery(4, 3) != sign_battery(4, 4));
}
