#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/rational.hpp"

namespace sgm {

using RatVector = std::vector<Rational>;

/// Dense exact matrix with optional row and column labels.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(size_t r) const;
  RatVector column(size_t c) const;
  RatMatrix transpose() const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;
  bool is_symmetric() const;

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  /// Throws std::invalid_argument if labels are present but duplicated or of
  /// the wrong count.
  void check_labels() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<size_t> row_reduce(RatMatrix& m);
size_t rank(RatMatrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> nullspace(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Some x with m x = b, or nullopt.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace sgm
