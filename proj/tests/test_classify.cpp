#include <doctest.h>

#include <stdexcept>

#include "sgm/classify.hpp"
#include "sgm/enumerate.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;

TEST_CASE("equivalence examples") {
  Multigraph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(equivalence(path, path, 4) == Rational(1));
  CHECK(equivalence(path, path.with_reversed_group(0), 4) == Rational(-1));

  Multigraph dbl(2, {{0, 1, 2}});
  Multigraph star(3, {{0, 1, 1}, {0, 2, 1}});
  auto c = equivalence(dbl, star, 4);
  REQUIRE(c);
  CHECK(abs(*c) == 2);
  CHECK(symmetrized_graph_monomial(dbl, 4) == symmetrized_graph_monomial(star, 4) * *c);

  CHECK_THROWS_AS(equivalence(Multigraph(2, {{0, 1, 1}}), dbl, 4), std::invalid_argument);
}

TEST_CASE("non-proportional graphs") {
  Multigraph dbl(2, {{0, 1, 2}});
  Multigraph four(2, {{0, 1, 4}});
  Multigraph two_dbl(4, {{0, 1, 2}, {2, 3, 2}});
  CHECK_FALSE(equivalence(four, two_dbl, 8));
  CHECK(equivalence(dbl, dbl, 4) == Rational(1));
}

TEST_CASE("classification at d = 2") {
  auto r = classify_report(2);
  CHECK(r.n == 4);
  CHECK(r.total == 3);
  CHECK(r.vanishing.size() == 1);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].members.size() == 2);
  CHECK(r.classes[0].label == Label::SquareCone);
  REQUIRE(r.classes[0].cone);
  CHECK(verify_cone_certificate(r.classes[0].oriented(), *r.classes[0].cone));
}

TEST_CASE("label names") {
  CHECK(label_name(Label::SquareCone) == "SQUARE_CONE");
  CHECK(label_name(Label::SignChanging) == "SIGN_CHANGING");
  CHECK(label_name(Label::SosCertified) == "SOS_CERTIFIED");
  CHECK(label_name(Label::CandidateLax) == "CANDIDATE_LAX");
}
