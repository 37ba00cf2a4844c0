#pragma once

#include <vector>

#include "sgm/multigraph.hpp"
#include "sgm/partition.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// Integer partition whose parts are all >= 2.
class TwoPartition {
 public:
  explicit TwoPartition(Partition parts);

  const Partition& parts() const { return parts_; }
  int sum() const { return weight(parts_); }
  /// Odd parts in decreasing order followed by even parts in decreasing order.
  const std::vector<int>& split() const { return split_; }
  int odd_count() const { return odd_count_; }

  bool operator==(const TwoPartition& o) const { return parts_ == o.parts_; }

 private:
  Partition parts_;
  std::vector<int> split_;
  int odd_count_ = 0;
};

/// a precedes b: at the first position where the split forms differ, either
/// both entries have the same parity and a's is larger, or a's is odd and b's
/// even. A split form that runs out is padded with even zeros.
bool precedes(const TwoPartition& a, const TwoPartition& b);

/// All 2-partitions of d, ascending under precedes().
std::vector<TwoPartition> two_partitions_ordered(int d);

/// Disjoint union of out-directed stars, one with alpha_i leaves per part.
Multigraph partition_graph(const TwoPartition& alpha);

/// Square graph h_alpha for even |alpha|: a double-edge star with alpha_i / 2
/// leaves per even part; per consecutive pair of odd parts a glued component
/// (two centers joined by a double edge, center i carrying floor(alpha_i / 2)
/// double pendant edges).
Multigraph square_graph(const TwoPartition& alpha);

/// coeff_of(s, beta) / (n - len(beta))!.
Rational normalized_coeff(const SymPoly& s, const Partition& beta);

/// prod_j (#{i : alpha_i = j})!, the diagonal value of the partition-graph lemma.
Integer repetition_factorial(const TwoPartition& alpha);

/// (-1)^(#odd / 2) * 2^(#parts equal to 2) * repetition_factorial(alpha).
Rational printed_square_coefficient(const TwoPartition& alpha);

/// (-1)^(#odd / 2) * 2^(#parts equal to 2).
Rational printed_basis_diagonal(const TwoPartition& alpha);

/// Coordinates of s (a translation-invariant symmetric polynomial, n >= 2d)
/// in the basis of symmetrized partition graphs, read off the normalized
/// coefficients at the 2-partitions. Throws std::domain_error if the
/// reconstruction does not reproduce s exactly.
std::vector<Rational> partition_graph_coordinates(const SymPoly& s, const std::vector<TwoPartition>& order);

/// Rows: symmetrized square graphs h~_alpha; columns: symmetrized partition
/// graphs b~_beta; both indexed by the 2-partitions of d in ascending
/// precedes() order.
struct BasisMatrix {
  int d = 0;
  int n = 0;
  std::vector<TwoPartition> order;
  std::vector<std::vector<Rational>> entries;
  std::vector<std::vector<Rational>> inverse;

  /// entries[a][b] == 0 whenever order[b] precedes order[a].
  bool vanishes_before_diagonal() const;
  Rational diagonal(size_t i) const { return entries[i][i]; }
};

/// Requires even d and n >= 2d. Throws std::domain_error on a singular
/// matrix or a failed reconstruction.
BasisMatrix change_of_basis_matrix(int d, int n);

}  // namespace sgm
