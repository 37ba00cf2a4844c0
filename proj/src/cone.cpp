#include "sgm/cone.hpp"

#include <optional>
#include <stdexcept>

#include "sgm/enumerate.hpp"
#include "sgm/parallel.hpp"
#include "sgm/simplex.hpp"
#include "sgm/symgm.hpp"

namespace sgm {

namespace {

RatVector coordinates_in(const SymPoly& s, const std::vector<Partition>& coords) {
  RatVector v;
  v.reserve(coords.size());
  for (const auto& p : coords) v.push_back(s.m_coeff(p));
  return v;
}

}  // namespace

std::vector<SquareGenerator> square_generators(int d, int n) {
  if (d % 2 != 0) throw std::invalid_argument("square cone needs even degree, got " + std::to_string(d));
  std::vector<Multigraph> halves;
  for (const auto& g : enumerate_multigraphs(d / 2)) {
    Multigraph dg = double_graph(g);
    if (dg.non_isolated_count() <= n) halves.push_back(std::move(dg));
  }
  std::vector<std::optional<SquareGenerator>> slots(halves.size());
  parallel_for(halves.size(), [&](size_t i) {
    SymPoly p = symmetrized_graph_monomial(halves[i], n);
    if (!p.is_zero()) slots[i] = SquareGenerator{halves[i], canonical_form(halves[i]), std::move(p)};
  });
  std::vector<SquareGenerator> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

bool verify_cone_certificate(const SymPoly& target, const ConeCertificate& cert) {
  SymPoly sum(target.n_vars(), target.degree());
  for (const auto& t : cert.terms) {
    if (t.weight <= 0) return false;
    if (t.generator.poly.n_vars() != target.n_vars() || t.generator.poly.degree() != target.degree()) return false;
    if (symmetrized_graph_monomial(t.generator.graph, target.n_vars()) != t.generator.poly) return false;
    sum += t.generator.poly * t.weight;
  }
  return sum == target;
}

bool verify_cone_farkas(const SymPoly& target, const std::vector<SquareGenerator>& gens,
                        const std::vector<Partition>& coordinates, const RatVector& y) {
  if (y.size() != coordinates.size()) return false;
  for (const auto& g : gens)
    if (dot(y, coordinates_in(g.poly, coordinates)) > 0) return false;
  return dot(y, coordinates_in(target, coordinates)) > 0;
}

ConeResult cone_membership(const SymPoly& target, int d, int n) {
  if (d % 2 != 0) throw std::invalid_argument("cone membership needs even degree, got " + std::to_string(d));
  if (target.degree() != d || target.n_vars() != n)
    throw std::invalid_argument("target has degree " + std::to_string(target.degree()) + " in " +
                                std::to_string(target.n_vars()) + " variables, expected " + std::to_string(d) +
                                " in " + std::to_string(n));
  auto gens = square_generators(d, n);
  if (gens.empty())
    throw std::invalid_argument("no square generator of degree " + std::to_string(d) + " survives at n = " +
                                std::to_string(n));
  ConeResult res;
  res.generator_count = gens.size();
  res.coordinates = partitions_of(d, n);
  RatMatrix a(res.coordinates.size(), gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    auto col = coordinates_in(gens[j].poly, res.coordinates);
    for (size_t i = 0; i < col.size(); ++i) a(i, j) = col[i];
  }
  LpResult lp = lp_feasible(a, coordinates_in(target, res.coordinates));
  if (lp.feasible) {
    res.member = true;
    for (size_t j = 0; j < gens.size(); ++j)
      if (lp.lambda[j] != 0) res.certificate.terms.push_back({gens[j], lp.lambda[j]});
    if (!verify_cone_certificate(target, res.certificate))
      throw std::logic_error("cone certificate fails polynomial re-verification");
  } else {
    res.farkas = lp.farkas;
    if (!verify_cone_farkas(target, gens, res.coordinates, res.farkas))
      throw std::logic_error("Farkas vector fails re-verification");
  }
  return res;
}

}  // namespace sgm
