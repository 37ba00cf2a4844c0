#pragma once

#include <vector>

#include "sgm/multigraph.hpp"
#include "sgm/partition.hpp"
#include "sgm/ratmatrix.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// A symmetrized square-graph monomial used as a cone generator.
struct SquareGenerator {
  Multigraph graph;
  CanonicalKey key;
  SymPoly poly;
};

struct ConeTerm {
  SquareGenerator generator;
  Rational weight;
};

/// target = sum of weight * generator.poly, all weights positive.
struct ConeCertificate {
  std::vector<ConeTerm> terms;
};

/// Result of a cone-membership query. When member is false, farkas is indexed
/// by coordinates: y . target > 0 and y . g <= 0 for every generator g.
struct ConeResult {
  bool member = false;
  ConeCertificate certificate;
  std::vector<Partition> coordinates;
  RatVector farkas;
  size_t generator_count = 0;
};

/// g~ at n variables of double_graph(g) for every g in enumerate_multigraphs(d/2)
/// with at most n non-isolated vertices, dropping those that vanish.
std::vector<SquareGenerator> square_generators(int d, int n);

/// Decides whether target lies in the convex cone of square_generators(d, n).
/// Throws std::invalid_argument for odd d, a target of the wrong shape, or n
/// too small to host any generator.
ConeResult cone_membership(const SymPoly& target, int d, int n);

/// Exact re-checks: the certificate sums to target, or the Farkas vector
/// separates target from every generator.
bool verify_cone_certificate(const SymPoly& target, const ConeCertificate& cert);
bool verify_cone_farkas(const SymPoly& target, const std::vector<SquareGenerator>& gens,
                        const std::vector<Partition>& coordinates, const RatVector& y);

}  // namespace sgm
