#pragma once

#include "sgm/poly.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// Polynomial in formal variables e_0, e_1, ..., e_n stored as a Poly with
/// n + 1 variables; variable 0 is e_0. Before homogenization e_0 never occurs.
struct ElemPoly {
  int n;  // number of roots; e_1..e_n are available
  Poly poly;

  explicit ElemPoly(int n_roots) : n(n_roots), poly(n_roots + 1) {}
  ElemPoly(int n_roots, Poly p);

  bool is_zero() const { return poly.is_zero(); }
  bool operator==(const ElemPoly& o) const { return n == o.n && poly == o.poly; }
  std::string to_string() const;
};

/// Coefficient of m_lambda in e_mu(x_1..x_n): the number of 0-1 matrices with
/// row sums mu and column sums lambda.
Integer elementary_to_monomial_coefficient(const Partition& mu, const Partition& lambda);

/// e_mu = prod_i e_{mu_i} expanded in the m-basis of n variables.
SymPoly elementary_product(const Partition& mu, int n);

/// Unique E with E(e_1(x), ..., e_n(x)) = s, by repeatedly cancelling the
/// leading m-basis term lambda with e_{lambda'}.
ElemPoly to_elementary(const SymPoly& s);

/// Substitutes the elementary symmetric polynomials back in. Every term must
/// be free of e_0 and have the same weighted degree sum_i i * k_i; a
/// homogenized input is first dehomogenized by setting e_0 = 1.
SymPoly from_elementary(const ElemPoly& e);

/// Multiplies each term by the power of e_0 that brings its ordinary degree
/// to d. Throws std::invalid_argument if some term exceeds d.
ElemPoly homogenize(const ElemPoly& e, int d);

}  // namespace sgm
