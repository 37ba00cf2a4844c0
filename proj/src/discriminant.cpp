#include "sgm/discriminant.hpp"

#include <stdexcept>

namespace sgm {

TPoly root_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("root polynomial needs n >= 1");
  TPoly p;
  p.coeffs.assign(n + 1, Poly(n + 1));
  for (int j = 0; j <= n; ++j) {
    Poly c = j == 0 ? Poly::constant(n + 1, 1) : Poly::variable(n + 1, j);
    p.coeffs[n - j] = j % 2 == 0 ? c : -c;
  }
  return p;
}

TPoly derivative_k(const TPoly& p, int k) {
  if (k < 0 || k > p.degree() - 2)
    throw std::invalid_argument("derivative order " + std::to_string(k) + " out of range for degree " +
                                std::to_string(p.degree()));
  TPoly out;
  for (int m = 0; m + k <= p.degree(); ++m) {
    // t^(m+k) differentiates k times to (m+k)! / m! t^m.
    Integer f = factorial(static_cast<unsigned>(m + k)) / factorial(static_cast<unsigned>(m));
    out.coeffs.push_back(p.coeffs[m + k] * Rational(f));
  }
  return out;
}

TPoly in_roots(const TPoly& p, int n) {
  // e_j -> elementary symmetric polynomial of degree j in x_1..x_n.
  std::vector<Poly> images;
  images.push_back(Poly::constant(n, 1));
  Poly prod = Poly::constant(n, 1);
  TPoly roots;
  // Coefficients of prod (1 + x_i u) in u are e_0..e_n.
  std::vector<Poly> e(n + 1, Poly(n));
  e[0] = Poly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(n, i);
    for (int j = i + 1; j >= 1; --j) e[j] += e[j - 1] * xi;
  }
  for (const auto& c : p.coeffs) roots.coeffs.push_back(c.substitute(e));
  return roots;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const int vars = m[0][0].n_vars();
  bool negate = false;
  Poly prev = Poly::constant(vars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly(vars);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step is not an exact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly(vars);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Poly resultant_sylvester(const TPoly& f, const TPoly& g) {
  const int df = f.degree(), dg = g.degree();
  if (df < 1 || dg < 1) throw std::invalid_argument("resultant needs both degrees >= 1");
  if (f.leading().is_zero() || g.leading().is_zero()) throw std::invalid_argument("zero leading coefficient");
  const int vars = f.leading().n_vars();
  const size_t size = static_cast<size_t>(df + dg);
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(vars)));
  // Row r holds the coefficients from the top degree down, shifted r places.
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) s[r][r + i] = f.coeffs[df - i];
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i) s[dg + r][r + i] = g.coeffs[dg - i];
  return bareiss_determinant(std::move(s));
}

Poly discriminant(const TPoly& f) {
  const int m = f.degree();
  if (m < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  const Poly& lc = f.leading();
  if (lc.total_degree() != 0) throw std::invalid_argument("discriminant needs a constant leading coefficient");
  TPoly df;
  for (int i = 1; i <= m; ++i) df.coeffs.push_back(f.coeffs[i] * Rational(i));
  Poly res = resultant_sylvester(f, df);
  Rational scale = 1 / lc.terms().begin()->second;
  if ((m * (m - 1) / 2) % 2 == 1) scale = -scale;
  return res * scale;
}

SymPoly disc_nk(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2)
    throw std::invalid_argument("disc_nk needs 0 <= k <= n - 2, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
  Poly d = discriminant(derivative_k(root_polynomial(n), k));
  SymPoly s = from_elementary(ElemPoly(n, std::move(d)));
  const int expected = (n - k) * (n - k - 1);
  if (!s.is_zero() && s.degree() != expected)
    throw std::logic_error("discriminant has degree " + std::to_string(s.degree()) + ", expected " +
                           std::to_string(expected));
  if (s.is_zero()) throw std::logic_error("discriminant vanished identically");
  return s;
}

}  // namespace sgm
