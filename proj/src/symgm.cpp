#include "sgm/symgm.hpp"

#include <stdexcept>

namespace sgm {

Poly graph_monomial(const Multigraph& g) {
  const int n = g.n_vertices();
  Poly p = Poly::constant(n, 1);
  for (const auto& e : g.edges()) {
    Poly diff = Poly::variable(n, e.from) - Poly::variable(n, e.to);
    p = p * diff.pow(static_cast<unsigned>(e.mult));
  }
  return p;
}

SymPoly symmetrized_graph_monomial(const Multigraph& g, int n) {
  Multigraph core = g.without_isolated();
  if (n < core.n_vertices())
    throw std::invalid_argument("graph has " + std::to_string(core.n_vertices()) +
                                " non-isolated vertices, more than n = " + std::to_string(n));
  if (core.n_vertices() == 0) {
    // Empty product: P_g = 1, and the sum has n! terms.
    SymPoly s(n, 0);
    s.add_term({}, Rational(factorial(static_cast<unsigned>(n))));
    return s;
  }
  return symmetrize_poly(graph_monomial(core), n);
}

namespace {

struct ColoringSearch {
  const Multigraph& g;
  const Partition& alpha;
  std::vector<int> remaining;  // uncolored multiplicity per edge group
  std::vector<bool> painted;
  std::vector<std::vector<size_t>> incident;  // edge groups at each vertex
  ColoringCount result;

  void color(size_t c, const Integer& ways, bool negative) {
    if (c == alpha.size()) {
      (negative ? result.negative : result.positive) += ways;
      return;
    }
    for (int v = 0; v < g.n_vertices(); ++v) {
      if (painted[v]) continue;
      int capacity = 0;
      for (size_t idx : incident[v]) capacity += remaining[idx];
      if (capacity < alpha[c]) continue;
      painted[v] = true;
      distribute(c, v, 0, alpha[c], ways, negative);
      painted[v] = false;
    }
  }

  // Chooses how many uncolored copies of each incident group color c takes.
  void distribute(size_t c, int v, size_t pos, int left, const Integer& ways, bool negative) {
    const auto& inc = incident[v];
    if (pos == inc.size()) {
      if (left == 0) color(c + 1, ways, negative);
      return;
    }
    size_t idx = inc[pos];
    const Edge& e = g.edges()[idx];
    int avail = remaining[idx];
    int rest = 0;
    for (size_t p = pos + 1; p < inc.size(); ++p) rest += remaining[inc[p]];
    for (int k = 0; k <= std::min(avail, left); ++k) {
      if (left - k > rest) continue;
      remaining[idx] -= k;
      bool odd = (e.to == v) && (k % 2 == 1);
      distribute(c, v, pos + 1, left - k,
                 ways * binomial(static_cast<unsigned>(avail), static_cast<unsigned>(k)), negative != odd);
      remaining[idx] += k;
    }
  }
};

}  // namespace

ColoringCount count_partition_colorings(const Multigraph& g, const Partition& alpha) {
  if (!is_partition(alpha)) throw std::invalid_argument("coloring needs a partition with positive parts");
  if (weight(alpha) != g.edge_count())
    throw std::invalid_argument("partition " + format_partition(alpha) + " does not sum to the edge count " +
                                std::to_string(g.edge_count()));
  ColoringSearch search{g, alpha, {}, std::vector<bool>(g.n_vertices(), false),
                        std::vector<std::vector<size_t>>(g.n_vertices()), {}};
  for (size_t i = 0; i < g.edges().size(); ++i) {
    search.remaining.push_back(g.edges()[i].mult);
    search.incident[g.edges()[i].from].push_back(i);
    search.incident[g.edges()[i].to].push_back(i);
  }
  search.color(0, Integer(1), false);
  return search.result;
}

Rational coeff_by_coloring(const Multigraph& g, const Partition& alpha, int n) {
  Multigraph core = g.without_isolated();
  if (n < core.n_vertices()) throw std::invalid_argument("variable count smaller than the number of non-isolated vertices");
  if (static_cast<int>(alpha.size()) > n) throw std::invalid_argument("partition has more parts than variables");
  ColoringCount count = count_partition_colorings(core, alpha);
  return Rational(factorial(static_cast<unsigned>(n - static_cast<int>(alpha.size()))) * count.signed_value());
}

ElemPoly q_covariant(const Multigraph& g, int n) {
  return homogenize(to_elementary(symmetrized_graph_monomial(g, n)), g.edge_count());
}

}  // namespace sgm
