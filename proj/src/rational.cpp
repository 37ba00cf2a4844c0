#include "sgm/rational.hpp"

#include <stdexcept>

namespace sgm {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace sgm
