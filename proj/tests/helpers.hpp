#pragma once

#include <initializer_list>
#include <utility>

#include "sgm/poly.hpp"
#include "sgm/sympoly.hpp"

namespace testing {

inline sgm::Poly x(int n, int i) { return sgm::Poly::variable(n, i); }

inline sgm::SymPoly sym(int n, int degree, std::initializer_list<std::pair<sgm::Partition, sgm::Rational>> terms) {
  sgm::SymPoly s(n, degree);
  for (const auto& [p, c] : terms) s.add_term(p, c);
  return s;
}

inline sgm::Poly diff_sq(int n, int i, int j) {
  sgm::Poly d = x(n, i) - x(n, j);
  return d * d;
}

}  // namespace testing
