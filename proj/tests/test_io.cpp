#include <doctest.h>

#include <stdexcept>

#include <filesystem>

#include "helpers.hpp"
#include "sgm/io.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;

TEST_CASE("graph JSON round trip with 1-based vertices") {
  Multigraph g(4, {{0, 1, 2}, {2, 3, 1}, {1, 2, 1}});
  Json j = graph_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(j["edges"][0] == Json::array({1, 2, 2}));
  CHECK(graph_from_json(j) == g);
}

TEST_CASE("sympoly JSON round trip") {
  SymPoly s = testing::sym(3, 2, {{{2}, Rational(-2, 3)}, {{1, 1}, 2}});
  Json j = sympoly_to_json(s);
  CHECK(j["terms"][0][1] == "-2/3");
  CHECK(sympoly_from_json(j) == s);
}

TEST_CASE("matrix and certificate JSON round trip") {
  RatMatrix m = RatMatrix::from_rows({{1, Rational(1, 2)}, {Rational(1, 2), 3}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  SosCertificate c{{{1, 0}, {0, 1}}, m, Rational(5)};
  SosCertificate back = sos_from_json(sos_to_json(c));
  CHECK(back.v == c.v);
  CHECK(back.q == c.q);
  CHECK(back.scale == 5);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[1,3,1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"n":2,"degree":2,"terms":[[[2],"x"]]})")), std::invalid_argument);
  CHECK_THROWS_AS(sympoly_from_json(Json::parse(R"({"n":2,"degree":3,"terms":[[[2],"1"]]})")), std::invalid_argument);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("file round trip") {
  auto path = std::filesystem::temp_directory_path() / "sgm_io_test.json";
  Json j = sympoly_to_json(symmetrized_graph_monomial(Multigraph(2, {{0, 1, 2}}), 3));
  write_json_file(path.string(), j);
  CHECK(read_json_file(path.string()) == j);
  std::filesystem::remove(path);
}
