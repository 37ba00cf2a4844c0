#include "sgm/simplex.hpp"

#include <stdexcept>

namespace sgm {

bool is_feasible_point(const RatMatrix& a, const RatVector& b, const RatVector& lambda) {
  if (lambda.size() != a.cols()) return false;
  for (const auto& x : lambda)
    if (x < 0) return false;
  return a * lambda == b;
}

bool is_farkas_vector(const RatMatrix& a, const RatVector& b, const RatVector& y) {
  if (y.size() != a.rows()) return false;
  for (size_t c = 0; c < a.cols(); ++c)
    if (dot(y, a.column(c)) > 0) return false;
  return dot(y, b) > 0;
}

LpResult lp_feasible(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("lp_feasible: " + std::to_string(a.rows()) + " rows but right-hand side of size " +
                                std::to_string(b.size()));
  const size_t m = a.rows(), k = a.cols();
  // Tableau columns: k structural, m artificial, then the right-hand side.
  const size_t width = k + m + 1, rhs = k + m;
  RatMatrix t(m, width);
  std::vector<int> flip(m, 1);
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (size_t j = 0; j < k; ++j) t(i, j) = flip[i] * a(i, j);
    t(i, k + i) = 1;
    t(i, rhs) = flip[i] * b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = k + i;

  // Reduced costs of the phase-1 objective (sum of artificials).
  RatVector cost(width);
  for (size_t j = k; j < k + m; ++j) cost[j] = 1;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < width; ++j)
      if (t(i, j) != 0) cost[j] -= t(i, j);

  while (true) {
    size_t enter = width;
    for (size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    // Ratio test; ties go to the smallest basic index.
    size_t leave = m;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational r = t(i, rhs) / t(i, enter);
      if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
        leave = i;
        best = r;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 objective is bounded below; unbounded ray is impossible");
    Rational piv = t(leave, enter);
    for (size_t j = 0; j < width; ++j)
      if (t(leave, j) != 0) t(leave, j) /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rational f = t(i, enter);
      for (size_t j = 0; j < width; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (size_t j = 0; j < width; ++j)
        if (t(leave, j) != 0) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  LpResult out;
  // The phase-1 optimum is -cost[rhs].
  if (cost[rhs] == 0) {
    out.feasible = true;
    out.lambda.assign(k, 0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] < k) out.lambda[basis[i]] = t(i, rhs);
    if (!is_feasible_point(a, b, out.lambda)) throw std::logic_error("simplex solution fails exact verification");
  } else {
    // Dual of the phase-1 problem: y_i = 1 - reduced cost of artificial i.
    out.farkas.resize(m);
    for (size_t i = 0; i < m; ++i) out.farkas[i] = flip[i] * (1 - cost[k + i]);
    if (!is_farkas_vector(a, b, out.farkas)) throw std::logic_error("Farkas vector fails exact verification");
  }
  return out;
}

}  // namespace sgm
