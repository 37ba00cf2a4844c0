#include "sgm/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgm {

int exponent_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

Poly Poly::constant(int n_vars, const Rational& c) {
  Poly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

Poly Poly::variable(int n_vars, int index) {
  if (index < 0 || index >= n_vars) throw std::out_of_range("variable index out of range");
  Exponent e(n_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Poly Poly::monomial(Exponent e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return exponent_degree(terms_.rbegin()->first);
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int lo = exponent_degree(terms_.begin()->first);
  int hi = exponent_degree(terms_.rbegin()->first);
  if (lo != hi) return std::nullopt;
  return hi;
}

int Poly::used_vars() const {
  int used = 0;
  for (const auto& [e, c] : terms_)
    for (int i = n_vars_ - 1; i >= used; --i)
      if (e[i] != 0) {
        used = i + 1;
        break;
      }
  return used;
}

const Poly::TermMap::value_type& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_vars_ != n_vars_) throw std::invalid_argument("variable count mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.n_vars_ != n_vars_) throw std::invalid_argument("variable count mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("variable count mismatch in product");
  Poly r(a.n_vars_);
  Exponent e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(n_vars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_vars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_vars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::with_n_vars(int n) const {
  if (n < used_vars()) throw std::invalid_argument("cannot drop a variable that occurs in the polynomial");
  Poly r(n);
  for (const auto& [e, c] : terms_) {
    Exponent f(n, 0);
    std::copy_n(e.begin(), std::min(n, n_vars_), f.begin());
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Poly Poly::renamed(const std::vector<int>& image, int image_vars) const {
  if (static_cast<int>(image.size()) != n_vars_) throw std::invalid_argument("renaming has wrong length");
  Poly r(image_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(image_vars, 0);
    for (int i = 0; i < n_vars_; ++i) f.at(image[i]) += e[i];
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != n_vars_) throw std::invalid_argument("substitution has wrong length");
  int m = images.empty() ? 0 : images.front().n_vars();
  std::vector<std::vector<Poly>> powers(n_vars_);
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(m, c);
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("variable count mismatch in division");
  const int n = a.n_vars();
  Poly rem = a;
  Poly quot(n);
  const auto& [lb, cb] = b.leading_term();
  Exponent q(n);
  while (!rem.is_zero()) {
    const auto& [lr, cr] = rem.leading_term();
    for (int i = 0; i < n; ++i) {
      q[i] = lr[i] - lb[i];
      if (q[i] < 0) return std::nullopt;
    }
    Rational c = cr / cb;
    Poly step = Poly::monomial(q, c);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

}  // namespace sgm
