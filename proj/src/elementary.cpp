#include "sgm/elementary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sgm {

ElemPoly::ElemPoly(int n_roots, Poly p) : n(n_roots), poly(std::move(p)) {
  if (poly.n_vars() != n_roots + 1) throw std::invalid_argument("elementary polynomial needs n + 1 variables");
}

std::string ElemPoly::to_string() const {
  if (poly.is_zero()) return "0";
  std::string s;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int i = 0; i <= n; ++i) {
      if (e[i] == 0) continue;
      s += "*e" + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

namespace {

using State = std::vector<int>;  // remaining column sums, descending, no zeros

struct ZeroOneCounter {
  const Partition& rows;
  std::map<std::pair<size_t, State>, Integer> memo;

  Integer count(size_t row, const State& cols) {
    if (row == rows.size()) return cols.empty() ? Integer(1) : Integer(0);
    auto key = std::make_pair(row, cols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Group equal column sums; choose how many columns of each group this row hits.
    std::vector<std::pair<int, int>> groups;  // (value, size)
    for (int c : cols) {
      if (groups.empty() || groups.back().first != c) groups.emplace_back(c, 0);
      ++groups.back().second;
    }
    Integer total = 0;
    std::vector<int> take(groups.size(), 0);
    std::function<void(size_t, int, Integer)> choose = [&](size_t g, int left, Integer ways) {
      if (g == groups.size()) {
        if (left != 0) return;
        State next;
        for (size_t i = 0; i < groups.size(); ++i) {
          auto [value, size] = groups[i];
          for (int k = 0; k < size - take[i]; ++k) next.push_back(value);
          if (value > 1)
            for (int k = 0; k < take[i]; ++k) next.push_back(value - 1);
        }
        std::sort(next.begin(), next.end(), std::greater<>());
        total += ways * count(row + 1, next);
        return;
      }
      for (int t = 0; t <= std::min(left, groups[g].second); ++t) {
        take[g] = t;
        choose(g + 1, left - t, ways * binomial(static_cast<unsigned>(groups[g].second), static_cast<unsigned>(t)));
      }
      take[g] = 0;
    };
    choose(0, rows[row], Integer(1));
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Integer elementary_to_monomial_coefficient(const Partition& mu, const Partition& lambda) {
  if (weight(mu) != weight(lambda)) return 0;
  ZeroOneCounter counter{mu, {}};
  return counter.count(0, lambda);
}

SymPoly elementary_product(const Partition& mu, int n) {
  for (int part : mu)
    if (part > n) return SymPoly(n, weight(mu));  // e_k = 0 for k > n
  SymPoly s(n, weight(mu));
  ZeroOneCounter counter{mu, {}};
  for (const auto& lambda : partitions_of(weight(mu), n)) s.add_term(lambda, Rational(counter.count(0, lambda)));
  return s;
}

ElemPoly to_elementary(const SymPoly& s) {
  const int n = s.n_vars();
  ElemPoly result(n);
  SymPoly rest = s;
  while (!rest.is_zero()) {
    // The map is ordered leading-first; x^lambda leads e_{lambda'}.
    auto [lambda, c] = *rest.terms().begin();
    Partition mu = conjugate(lambda);
    Exponent e(n + 1, 0);
    for (int part : mu) ++e[part];
    result.poly.add_term(e, c);
    SymPoly sub = elementary_product(mu, n);
    if (sub.m_coeff(lambda) != 1) throw std::logic_error("elementary leading coefficient is not 1");
    rest -= sub * c;
  }
  return result;
}

SymPoly from_elementary(const ElemPoly& e) {
  const int n = e.n;
  std::optional<int> degree;
  std::map<Partition, Rational, GradedLexDescending> collected;
  for (const auto& [exp, c] : e.poly.terms()) {
    Partition mu;
    for (int i = n; i >= 1; --i)
      for (int k = 0; k < exp[i]; ++k) mu.push_back(i);
    int w = weight(mu);
    if (degree && *degree != w) throw std::invalid_argument("elementary polynomial is not weighted-homogeneous");
    degree = w;
    collected[mu] += c;
  }
  SymPoly s(n, degree.value_or(0));
  for (const auto& [mu, c] : collected) {
    if (c == 0) continue;
    s += elementary_product(mu, n) * c;
  }
  return s;
}

ElemPoly homogenize(const ElemPoly& e, int d) {
  ElemPoly out(e.n);
  for (const auto& [exp, c] : e.poly.terms()) {
    int deg = exponent_degree(exp);
    if (deg > d)
      throw std::invalid_argument("term of degree " + std::to_string(deg) + " exceeds homogenization degree " +
                                  std::to_string(d));
    Exponent h = exp;
    h[0] += d - deg;
    out.poly.add_term(h, c);
  }
  return out;
}

}  // namespace sgm
