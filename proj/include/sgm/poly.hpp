#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgm/rational.hpp"

namespace sgm {

/// Dense exponent vector, one entry per variable.
using Exponent = std::vector<int>;

/// Graded lexicographic order, ascending. The last term of a Poly is its
/// leading term.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int exponent_degree(const Exponent& e);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored zero coefficient, every key has length n_vars().
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  explicit Poly(int n_vars = 0);

  static Poly constant(int n_vars, const Rational& c);
  static Poly variable(int n_vars, int index);
  static Poly monomial(Exponent e, const Rational& c);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Adds c * x^e to the polynomial, removing the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);
  Rational coeff(const Exponent& e) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree if every term has the same total degree; the zero polynomial is
  /// homogeneous of every degree and reports 0.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }
  /// Highest index of a variable that actually occurs, plus one.
  int used_vars() const;

  const TermMap::value_type& leading_term() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational evaluate(std::span<const Rational> point) const;

  /// Re-embeds in n variables. Growing pads with unused variables; shrinking
  /// requires the dropped variables to be absent.
  Poly with_n_vars(int n) const;
  /// Renames x_i to x_{image[i]} in a polynomial over image_vars variables.
  Poly renamed(const std::vector<int>& image, int image_vars) const;
  /// Replaces x_i by images[i]; all images share one variable count.
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string() const;

 private:
  int n_vars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

}  // namespace sgm
