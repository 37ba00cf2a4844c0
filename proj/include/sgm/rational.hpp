#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sgm {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from a raw numerator and
/// denominator go through make_rational(), which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" with q > 0; the denominator is always written, including "/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace sgm
