#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/cone.hpp"
#include "sgm/io.hpp"
#include "sgm/multigraph.hpp"
#include "sgm/positivity.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// c with g~1 = c g~2 at n variables, or nullopt if not proportional. Throws
/// std::invalid_argument if either polynomial vanishes.
std::optional<Rational> equivalence(const Multigraph& g1, const Multigraph& g2, int n);

enum class Label { SquareCone, SignChanging, SosCertified, CandidateLax };
std::string label_name(Label l);

struct ClassMember {
  Multigraph graph;
  CanonicalKey key;
  Rational constant;  // member g~ = constant * representative g~
};

struct EquivalenceClass {
  Multigraph representative;
  CanonicalKey key;
  SymPoly poly{1, 0};  // representative g~
  std::vector<ClassMember> members;
  Label label = Label::CandidateLax;
  /// +1 or -1: the evidence below is about orientation * poly.
  int orientation = 1;
  std::optional<ConeCertificate> cone;
  std::optional<SignWitness> sign;
  std::optional<SosCertificate> sos;
  int sos_vars = 0;
  /// Farkas vectors separating +poly and -poly from the square cone, when
  /// neither lies in it.
  std::optional<ConeResult> farkas_plus;
  std::optional<ConeResult> farkas_minus;

  SymPoly oriented() const { return poly * Rational(orientation); }
};

struct ClassificationReport {
  int d = 0;
  int n = 0;
  size_t total = 0;
  std::vector<Multigraph> vanishing;
  std::vector<EquivalenceClass> classes;

  size_t count(Label l) const;
};

struct ClassifyOptions {
  std::vector<int> sos_tiers{4, 5, 6};
  SosSearchOptions sos;
  uint64_t seed = 0;
};

/// Enumerate, symmetrize at n = 2d, split off vanishing graphs, group by
/// proportionality, and label every class in priority order: square cone,
/// sign change, SOS certificate, otherwise CANDIDATE_LAX.
ClassificationReport classify_report(int d, const ClassifyOptions& opts = {});

/// target = a * base + b * h with a, b > 0 and h a square generator.
struct PositiveCombination {
  Rational a;
  Rational b;
  SquareGenerator square;
};
std::optional<PositiveCombination> positive_combination(const SymPoly& target, const SymPoly& base);

/// Report JSON. Certificates are summarized; full certificates are written by
/// emit_certificates.
Json report_to_json(const ClassificationReport& r);
void emit_certificates(const ClassificationReport& r, const std::string& dir);

}  // namespace sgm
