#include "sgm/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgm {

SymPoly::SymPoly(int n_vars, int degree) : n_(n_vars), degree_(degree) {
  if (n_vars < 1) throw std::invalid_argument("symmetric polynomial needs at least one variable");
  if (degree < 0) throw std::invalid_argument("negative degree");
}

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (!is_partition(lambda) || weight(lambda) != degree_)
    throw std::invalid_argument("m-basis key " + format_partition(lambda) + " is not a partition of " +
                                std::to_string(degree_));
  if (static_cast<int>(lambda.size()) > n_)
    throw std::invalid_argument("m-basis key " + format_partition(lambda) + " has more parts than variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymPoly::m_coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw std::invalid_argument("shape mismatch in symmetric sum");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.n_ != n_ || o.degree_ != degree_) throw std::invalid_argument("shape mismatch in symmetric difference");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

Poly SymPoly::expand() const {
  Poly p(n_);
  for (const auto& [lambda, c] : terms_) {
    // Distinct rearrangements of the padded partition, ascending order first.
    Exponent e(n_, 0);
    std::copy(lambda.rbegin(), lambda.rend(), e.end() - static_cast<long>(lambda.size()));
    do {
      p.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return p;
}

namespace {

// m_lambda(a): assign the values of the padded partition to positions one at a
// time; the state is the multiset of values still unassigned.
Rational evaluate_monomial_symmetric(const Partition& lambda, std::span<const Rational> a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> values;
  std::vector<int> counts;
  for (int part : lambda) {
    if (values.empty() || values.back() != part) {
      values.push_back(part);
      counts.push_back(0);
    }
    ++counts.back();
  }
  int zeros = n - static_cast<int>(lambda.size());
  if (zeros > 0) {
    values.push_back(0);
    counts.push_back(zeros);
  }
  int maxv = values.empty() ? 0 : values.front();
  std::vector<std::vector<Rational>> powers(n, std::vector<Rational>(maxv + 1));
  for (int i = 0; i < n; ++i) {
    powers[i][0] = 1;
    for (int k = 1; k <= maxv; ++k) powers[i][k] = powers[i][k - 1] * a[i];
  }
  std::map<std::vector<int>, Rational> states{{counts, Rational(1)}};
  for (int i = 0; i < n; ++i) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [state, value] : states) {
      if (value == 0) continue;
      for (size_t v = 0; v < values.size(); ++v) {
        if (state[v] == 0) continue;
        auto s = state;
        --s[v];
        next[s] += value * powers[i][values[v]];
      }
    }
    states = std::move(next);
  }
  Rational total = 0;
  for (const auto& [state, value] : states) total += value;
  return total;
}

}  // namespace

Rational SymPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [lambda, c] : terms_) sum += c * evaluate_monomial_symmetric(lambda, point);
  return sum;
}

std::vector<Rational> SymPoly::coordinates() const {
  std::vector<Rational> out;
  for (const auto& lambda : partitions_of(degree_, n_)) out.push_back(m_coeff(lambda));
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [lambda, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*m" + format_partition(lambda);
  }
  return s;
}

SymPoly symmetrize_poly(const Poly& p, int n) {
  if (p.used_vars() > n)
    throw std::invalid_argument("polynomial uses " + std::to_string(p.used_vars()) + " variables but n = " +
                                std::to_string(n));
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("symmetrization requires a homogeneous polynomial");
  SymPoly s(n, *deg);
  Exponent padded(n, 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(padded.begin(), padded.end(), 0);
    for (int i = 0; i < p.n_vars(); ++i) padded[i] = e[i];
    Partition lambda = to_partition(padded);
    s.add_term(lambda, c * Rational(padded_multiplicity_factorial(lambda, n)));
  }
  return s;
}

Rational coeff_of(const SymPoly& s, const std::vector<int>& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent in coefficient query");
    total += a;
  }
  if (total != s.degree())
    throw std::invalid_argument("exponent sums to " + std::to_string(total) + " but degree is " +
                                std::to_string(s.degree()));
  Partition lambda = to_partition(alpha);
  if (static_cast<int>(lambda.size()) > s.n_vars()) return 0;
  return s.m_coeff(lambda);
}

SymPoly from_symmetric_poly(const Poly& p) {
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("polynomial is not homogeneous");
  const int n = std::max(p.n_vars(), 1);
  SymPoly s(n, *deg);
  for (const auto& [e, c] : p.terms()) {
    Partition lambda = to_partition(e);
    Exponent sorted(n, 0);
    std::copy(lambda.begin(), lambda.end(), sorted.begin());
    if (sorted == e) s.add_term(lambda, c);
  }
  // Symmetric iff the expansion of the read-off reproduces p.
  if (s.expand() != p.with_n_vars(n)) throw std::invalid_argument("polynomial is not symmetric");
  return s;
}

namespace {

// One application of D = sum_i d/dx_i in the m-basis.
SymPoly apply_total_derivative(const SymPoly& s) {
  const int n = s.n_vars();
  SymPoly out(n, std::max(s.degree() - 1, 0));
  if (s.degree() == 0) return out;
  for (const auto& mu : partitions_of(s.degree() - 1, n)) {
    std::vector<int> padded(mu);
    padded.resize(n, 0);
    Rational c = 0;
    // Raising any one of the positions holding value v gives the same key.
    for (size_t i = 0; i < padded.size();) {
      size_t j = i;
      while (j < padded.size() && padded[j] == padded[i]) ++j;
      int v = padded[i];
      std::vector<int> raised(padded);
      raised[i] = v + 1;
      c += Rational(static_cast<long>(j - i) * (v + 1)) * s.m_coeff(to_partition(raised));
      i = j;
    }
    out.add_term(mu, c);
  }
  return out;
}

}  // namespace

SymPoly shift_coefficient(const SymPoly& s, int k) {
  if (k < 0) throw std::invalid_argument("negative shift order");
  if (k > s.degree()) return SymPoly(s.n_vars(), 0);
  SymPoly cur = s;
  for (int i = 0; i < k; ++i) cur = apply_total_derivative(cur);
  cur *= Rational(1, 1) / Rational(factorial(static_cast<unsigned>(k)));
  return cur;
}

bool is_translation_invariant(const SymPoly& s) {
  // D^k s / k! is the t^k coefficient and D^k s = D^{k-1}(D s), so every
  // positive power vanishes exactly when the t^1 coefficient does.
  if (s.degree() == 0) return true;
  return apply_total_derivative(s).is_zero();
}

SymPoly resymmetrize(const SymPoly& s, int m) {
  const int n = s.n_vars();
  if (m < n) throw std::invalid_argument("cannot resymmetrize into fewer variables");
  SymPoly out(m, s.degree());
  const Integer nfact = factorial(static_cast<unsigned>(n));
  for (const auto& [lambda, c] : s.terms()) {
    Integer orbit = nfact / padded_multiplicity_factorial(lambda, n);
    out.add_term(lambda, c * Rational(orbit * padded_multiplicity_factorial(lambda, m)));
  }
  return out;
}

}  // namespace sgm
