#pragma once

#include <vector>

#include "sgm/elementary.hpp"
#include "sgm/poly.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// Univariate polynomial in t whose coefficients are polynomials in a common
/// ring. coeffs[i] multiplies t^i; the top coefficient is nonzero.
struct TPoly {
  std::vector<Poly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Poly& leading() const { return coeffs.back(); }
};

/// p(t) = prod_i (t - x_i) = sum_j (-1)^j e_j t^(n-j), with coefficients in
/// the elementary ring e_0..e_n (the ElemPoly layout; e_0 is unused).
TPoly root_polynomial(int n);

/// Formal k-th derivative in t. Requires 0 <= k <= deg - 2 so that the result
/// still has a discriminant; throws std::invalid_argument otherwise.
TPoly derivative_k(const TPoly& p, int k);

/// Same polynomial with every coefficient rewritten in the roots x_1..x_n.
TPoly in_roots(const TPoly& p, int n);

/// Determinant by fraction-free (Bareiss) elimination over the polynomial ring.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

/// det of the Sylvester matrix with the deg(g) shifted rows of f first, so
/// Res(f, g) = lc(f)^deg(g) lc(g)^deg(f) prod (a_i - b_j) over the roots.
Poly resultant_sylvester(const TPoly& f, const TPoly& g);

/// Disc(f) = (-1)^(m(m-1)/2) Res(f, f') / lc(f), m = deg f. The leading
/// coefficient must be a nonzero constant.
Poly discriminant(const TPoly& f);

/// Discriminant of the k-th derivative of prod (t - x_i), as a symmetric
/// polynomial in the n roots of degree (n-k)(n-k-1). Requires 0 <= k <= n-2.
SymPoly disc_nk(int n, int k);

}  // namespace sgm
