#include "sgm/ratmatrix.hpp"

#include <set>
#include <stdexcept>

namespace sgm {

RatMatrix::RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  size_t c = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(size_t r) const { return RatVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

RatVector RatMatrix::column(size_t c) const {
  RatVector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (o.rows_ != cols_) throw std::invalid_argument("matrix product dimension mismatch");
  RatMatrix out(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (size_t c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) out(r, c) += a * o(k, c);
    }
  return out;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void RatMatrix::check_labels() const {
  auto check = [](const std::vector<std::string>& labels, size_t expected, const char* what) {
    if (labels.empty()) return;
    if (labels.size() != expected) throw std::invalid_argument(std::string(what) + " label count mismatch");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
      throw std::invalid_argument(std::string("duplicate ") + what + " label");
  };
  check(row_labels, rows_, "row");
  check(col_labels, cols_, "column");
}

std::vector<size_t> row_reduce(RatMatrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Rational inv = 1 / m(r, c);
    for (size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (size_t k = c; k < m.cols(); ++k)
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(RatMatrix m) { return row_reduce(m).size(); }

std::vector<RatVector> nullspace(RatMatrix m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace sgm
