#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgm/rational.hpp"

namespace sgm {

/// Integer partition stored as weakly decreasing positive parts (no zeros).
using Partition = std::vector<int>;

/// Graded-lex on partitions: larger total first, then lexicographically
/// larger first. Used as the map order for m-basis storage, so iteration runs
/// from the leading partition downwards.
struct GradedLexDescending {
  bool operator()(const Partition& a, const Partition& b) const;
};

int weight(const Partition& p);
bool is_partition(const Partition& p);

/// Sorts an exponent vector into a partition, dropping zeros.
Partition to_partition(const std::vector<int>& exponents);

/// All partitions of d with at most max_parts parts, in lex-descending order.
std::vector<Partition> partitions_of(int d, int max_parts);

Partition conjugate(const Partition& p);

/// prod_k (multiplicity of value k)! over the parts of p.
Integer multiplicity_factorial(const Partition& p);

/// Same, but for p zero-padded to length n (zeros counted as a value).
Integer padded_multiplicity_factorial(const Partition& p, int n);

/// Parses "3,3" or "3 3" style lists; throws std::invalid_argument.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

}  // namespace sgm
