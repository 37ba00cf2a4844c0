#include "sgm/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace sgm {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json points_to_json(const std::vector<Rational>& pt) {
  Json a = Json::array();
  for (const auto& x : pt) a.push_back(to_string(x));
  return a;
}

}  // namespace

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.from + 1, e.to + 1, e.mult});
  return Json{{"n", g.n_vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    int n = j.at("n").get<int>();
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw std::invalid_argument("graph edge must be [i, j, mult]");
      es.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<int>()});
    }
    return Multigraph(n, std::move(es));
  });
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json sympoly_to_json(const SymPoly& s) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : s.terms()) terms.push_back({Json(lambda), to_string(c)});
  return Json{{"n", s.n_vars()}, {"degree", s.degree()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j) {
  return guarded("SymPoly", [&] {
    SymPoly s(j.at("n").get<int>(), j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) throw std::invalid_argument("SymPoly term must be [partition, \"p/q\"]");
      auto lambda = t[0].get<Partition>();
      if (s.m_coeff(lambda) != 0) throw std::invalid_argument("duplicate SymPoly term " + format_partition(lambda));
      s.add_term(lambda, rational_from_json(t[1]));
    }
    return s;
  });
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    std::vector<RatVector> rows;
    for (const auto& row : j) {
      RatVector v;
      for (const auto& x : row) v.push_back(rational_from_json(x));
      rows.push_back(std::move(v));
    }
    return RatMatrix::from_rows(rows);
  });
}

Json sos_to_json(const SosCertificate& c) {
  return Json{{"v", Json(c.v)}, {"Q", matrix_to_json(c.q)}, {"scale", to_string(c.scale)}};
}

SosCertificate sos_from_json(const Json& j) {
  return guarded("SOS certificate", [&] {
    SosCertificate c;
    c.v = j.at("v").get<std::vector<Exponent>>();
    c.q = c.v.empty() ? RatMatrix(0, 0) : matrix_from_json(j.at("Q"));
    c.scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(0);
    return c;
  });
}

Json cone_result_to_json(const ConeResult& r) {
  Json out{{"member", r.member}, {"generators", r.generator_count}};
  if (r.member) {
    Json terms = Json::array();
    for (const auto& t : r.certificate.terms)
      terms.push_back({{"graph", graph_to_json(t.generator.graph)}, {"key", t.generator.key},
                       {"weight", to_string(t.weight)}});
    out["terms"] = terms;
  } else {
    Json coords = Json::array();
    for (const auto& p : r.coordinates) coords.push_back(Json(p));
    Json y = Json::array();
    for (const auto& x : r.farkas) y.push_back(to_string(x));
    out["farkas"] = {{"coordinates", coords}, {"y", y}};
  }
  return out;
}

Json sign_witness_to_json(const SignWitness& w) {
  return Json{{"negative", {{"point", points_to_json(w.negative_point)}, {"value", to_string(w.negative_value)}}},
              {"positive", {{"point", points_to_json(w.positive_point)}, {"value", to_string(w.positive_value)}}}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sgm
