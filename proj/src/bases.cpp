#include "sgm/bases.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sgm/ratmatrix.hpp"
#include "sgm/symgm.hpp"

namespace sgm {

TwoPartition::TwoPartition(Partition parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_)
    if (p < 2) throw std::invalid_argument("2-partition parts must be at least 2: " + format_partition(parts_));
  for (int p : parts_)
    if (p % 2 == 1) split_.push_back(p);
  odd_count_ = static_cast<int>(split_.size());
  for (int p : parts_)
    if (p % 2 == 0) split_.push_back(p);
}

bool precedes(const TwoPartition& a, const TwoPartition& b) {
  const auto& x = a.split();
  const auto& y = b.split();
  const size_t len = std::max(x.size(), y.size());
  for (size_t j = 0; j < len; ++j) {
    int u = j < x.size() ? x[j] : 0;
    int v = j < y.size() ? y[j] : 0;
    if (u == v) continue;
    if ((u % 2) == (v % 2)) return u > v;
    return u % 2 == 1;
  }
  return false;
}

std::vector<TwoPartition> two_partitions_ordered(int d) {
  if (d < 2) throw std::invalid_argument("2-partitions need d >= 2");
  std::vector<TwoPartition> out;
  for (const auto& p : partitions_of(d, d))
    if (p.back() >= 2) out.emplace_back(p);
  std::sort(out.begin(), out.end(), precedes);
  return out;
}

Multigraph partition_graph(const TwoPartition& alpha) {
  std::vector<Edge> es;
  int next = 0;
  for (int part : alpha.parts()) {
    int center = next++;
    for (int k = 0; k < part; ++k) es.push_back({center, next++, 1});
  }
  return Multigraph(next, std::move(es));
}

Multigraph square_graph(const TwoPartition& alpha) {
  if (alpha.sum() % 2 != 0) throw std::invalid_argument("square graphs need an even edge count");
  const auto& split = alpha.split();
  std::vector<Edge> es;
  int next = 0;
  auto star = [&](int center, int leaves) {
    for (int k = 0; k < leaves; ++k) es.push_back({center, next++, 2});
  };
  for (int j = 0; j + 1 < alpha.odd_count(); j += 2) {
    int c1 = next++, c2 = next++;
    es.push_back({c1, c2, 2});
    star(c1, split[j] / 2);
    star(c2, split[j + 1] / 2);
  }
  for (size_t j = alpha.odd_count(); j < split.size(); ++j) {
    int c = next++;
    star(c, split[j] / 2);
  }
  return Multigraph(next, std::move(es));
}

Rational normalized_coeff(const SymPoly& s, const Partition& beta) {
  if (static_cast<int>(beta.size()) > s.n_vars()) return 0;
  return coeff_of(s, beta) / Rational(factorial(static_cast<unsigned>(s.n_vars() - static_cast<int>(beta.size()))));
}

Integer repetition_factorial(const TwoPartition& alpha) { return multiplicity_factorial(alpha.parts()); }

Rational printed_basis_diagonal(const TwoPartition& alpha) {
  int twos = static_cast<int>(std::count(alpha.parts().begin(), alpha.parts().end(), 2));
  Integer pow2 = 1;
  pow2 <<= twos;
  Rational v(pow2);
  return (alpha.odd_count() / 2) % 2 == 1 ? Rational(-v) : v;
}

Rational printed_square_coefficient(const TwoPartition& alpha) {
  return printed_basis_diagonal(alpha) * Rational(repetition_factorial(alpha));
}

std::vector<Rational> partition_graph_coordinates(const SymPoly& s, const std::vector<TwoPartition>& order) {
  std::vector<Rational> coords;
  SymPoly rebuilt(s.n_vars(), s.degree());
  for (const auto& beta : order) {
    Rational c = normalized_coeff(s, beta.parts()) / Rational(repetition_factorial(beta));
    coords.push_back(c);
    if (c != 0) rebuilt += symmetrized_graph_monomial(partition_graph(beta), s.n_vars()) * c;
  }
  if (rebuilt != s) throw std::domain_error("polynomial is not in the span of the symmetrized partition graphs");
  return coords;
}

bool BasisMatrix::vanishes_before_diagonal() const {
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = 0; b < order.size(); ++b)
      if (precedes(order[b], order[a]) && entries[a][b] != 0) return false;
  return true;
}

BasisMatrix change_of_basis_matrix(int d, int n) {
  if (d % 2 != 0) throw std::invalid_argument("square-graph basis needs even d");
  if (n < 2 * d) throw std::invalid_argument("(n, d) is not stable: need n >= 2d");
  BasisMatrix m;
  m.d = d;
  m.n = n;
  m.order = two_partitions_ordered(d);
  for (const auto& alpha : m.order)
    m.entries.push_back(partition_graph_coordinates(symmetrized_graph_monomial(square_graph(alpha), n), m.order));
  auto inv = inverse(RatMatrix::from_rows(m.entries));
  if (!inv) throw std::domain_error("change-of-basis matrix is singular");
  for (size_t i = 0; i < inv->rows(); ++i) m.inverse.push_back(inv->row(i));
  return m;
}

}  // namespace sgm
