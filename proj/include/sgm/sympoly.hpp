#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sgm/partition.hpp"
#include "sgm/poly.hpp"

namespace sgm {

/// Homogeneous symmetric polynomial in n variables, stored in the
/// monomial-symmetric basis: coefficient c_lambda multiplies
/// m_lambda = sum of the distinct monomials x^beta with sort(beta) = lambda.
/// Invariant: every key is a partition of degree() with at most n_vars() parts
/// and carries a nonzero coefficient.
class SymPoly {
 public:
  using TermMap = std::map<Partition, Rational, GradedLexDescending>;

  SymPoly(int n_vars, int degree);

  int n_vars() const { return n_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& lambda, const Rational& c);
  /// Coefficient of m_lambda, which is also the coefficient of x^lambda in
  /// the expanded polynomial.
  Rational m_coeff(const Partition& lambda) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  SymPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const SymPoly& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  /// Full expansion into the n_vars() variables.
  Poly expand() const;
  /// Exact value at a point, computed without expanding.
  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients in the m-basis for all partitions of degree() with at most
  /// n_vars() parts, in graded-lex order.
  std::vector<Rational> coordinates() const;

  std::string to_string() const;

 private:
  int n_;
  int degree_;
  TermMap terms_;
};

/// sum over sigma in S_n of P(sigma x). P must be homogeneous with at most n
/// variables. Every monomial x^beta contributes (prod_k mult_k(beta)!) m_sort(beta),
/// where mult_k counts entries equal to k among the n padded entries.
SymPoly symmetrize_poly(const Poly& p, int n);

/// Coefficient of x^alpha in the expansion of s. alpha may be given in any
/// order and with zeros; throws std::invalid_argument when |alpha| != degree.
Rational coeff_of(const SymPoly& s, const std::vector<int>& alpha);

/// Reads a Poly that is already symmetric into the m-basis. Throws
/// std::invalid_argument if p is not symmetric or not homogeneous.
SymPoly from_symmetric_poly(const Poly& p);

/// True iff s(x + t) = s(x) identically in t. The shift expands as
/// sum_k t^k D^k s / k! with D = sum_i d/dx_i; each coefficient is computed in
/// the m-basis and compared with zero.
bool is_translation_invariant(const SymPoly& s);

/// The coefficient of t^k in s(x_1 + t, ..., x_n + t), as a SymPoly of degree
/// degree() - k.
SymPoly shift_coefficient(const SymPoly& s, int k);

/// Re-expresses s in m variables by symmetrizing its expansion (divided by
/// nothing); with m > n this is Sym over the larger variable set.
SymPoly resymmetrize(const SymPoly& s, int m);

}  // namespace sgm
