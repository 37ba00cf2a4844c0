#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgm/poly.hpp"
#include "sgm/ratmatrix.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// P Q P^T = L D L^T, with perm[k] the original index placed at position k.
struct LdlFactor {
  std::vector<size_t> perm;
  RatMatrix l;
  RatVector d;
};

struct PsdResult {
  bool psd = false;
  LdlFactor ldl;            // when psd
  RatVector witness;        // when not: w^T Q w < 0
  Rational witness_value;
};

/// Exact symmetric-pivot LDL^T. Throws std::invalid_argument when Q is not
/// symmetric.
PsdResult psd_check(const RatMatrix& q);

/// Sum-of-squares certificate: v Q v^T with v a vector of monomials. The
/// monomials may live in fewer variables than the target; the certified
/// polynomial is then the symmetrization of v Q v^T over the target's
/// variables. target = scale * (certified polynomial).
struct SosCertificate {
  std::vector<Exponent> v;
  RatMatrix q;
  Rational scale = 1;
};

struct SosCheck {
  bool ok = false;
  Rational scale;
  std::string reason;
};

/// Exact check of both the polynomial identity (up to a positive scale) and
/// positive semidefiniteness of Q. If cert.scale is nonzero it must match.
SosCheck verify_sos(const SymPoly& target, const SosCertificate& cert);

struct SosSearchOptions {
  int iterations = 2000;
  uint64_t seed = 0;
  int max_denominator_log2 = 16;
};

/// The symmetric polynomial s in m variables whose symmetrization over
/// target.n_vars() variables is target, or nullopt if target has a term with
/// more than m parts.
std::optional<SymPoly> restrict_symmetrization(const SymPoly& target, int m);

/// Numeric search for a Gram matrix of restrict_symmetrization(target,
/// n_active), followed by rational rounding and exact verification against
/// target. Returns nullopt when nothing verifies. Throws
/// std::invalid_argument for odd degree.
std::optional<SosCertificate> find_sos(const SymPoly& target, int n_active, const SosSearchOptions& opts = {});

struct SignWitness {
  std::vector<Rational> negative_point;
  Rational negative_value;
  std::vector<Rational> positive_point;
  Rational positive_value;
};

struct SignSearchResult {
  std::optional<SignWitness> witness;
  /// First points seen with each strict sign, even if only one sign occurred.
  std::optional<std::vector<Rational>> negative_point;
  std::optional<std::vector<Rational>> positive_point;
  size_t points_tried = 0;
};

/// The deterministic point battery: sorted multisets of small integers,
/// two- and three-value collapse patterns, then seeded random rationals.
std::vector<std::vector<Rational>> sign_battery(int n, uint64_t seed);

/// Exact evaluation over sign_battery(n, seed). A witness needs both signs.
SignSearchResult sign_witness_search(const SymPoly& target, uint64_t seed = 0);

}  // namespace sgm
