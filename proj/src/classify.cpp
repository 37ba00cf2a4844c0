#include "sgm/classify.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>

#include "sgm/enumerate.hpp"
#include "sgm/parallel.hpp"
#include "sgm/ratmatrix.hpp"
#include "sgm/symgm.hpp"

namespace sgm {

namespace {

// First nonzero coefficient in graded-lex order.
Rational leading(const SymPoly& s) { return s.terms().begin()->second; }

SymPoly normalized(const SymPoly& s) { return s * (1 / leading(s)); }

}  // namespace

std::optional<Rational> equivalence(const Multigraph& g1, const Multigraph& g2, int n) {
  SymPoly a = symmetrized_graph_monomial(g1, n);
  SymPoly b = symmetrized_graph_monomial(g2, n);
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("equivalence needs non-vanishing symmetrizations");
  if (a.terms().begin()->first != b.terms().begin()->first) return std::nullopt;
  Rational c = leading(a) / leading(b);
  if (b * c != a) return std::nullopt;
  return c;
}

std::string label_name(Label l) {
  switch (l) {
    case Label::SquareCone: return "SQUARE_CONE";
    case Label::SignChanging: return "SIGN_CHANGING";
    case Label::SosCertified: return "SOS_CERTIFIED";
    case Label::CandidateLax: return "CANDIDATE_LAX";
  }
  return "?";
}

size_t ClassificationReport::count(Label l) const {
  size_t c = 0;
  for (const auto& k : classes) c += k.label == l;
  return c;
}

std::optional<PositiveCombination> positive_combination(const SymPoly& target, const SymPoly& base) {
  auto coords = partitions_of(target.degree(), target.n_vars());
  for (const auto& h : square_generators(target.degree(), target.n_vars())) {
    RatMatrix m(coords.size(), 2);
    RatVector rhs(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      m(i, 0) = base.m_coeff(coords[i]);
      m(i, 1) = h.poly.m_coeff(coords[i]);
      rhs[i] = target.m_coeff(coords[i]);
    }
    auto x = solve(m, rhs);
    if (!x || (*x)[0] <= 0 || (*x)[1] <= 0) continue;
    if (base * (*x)[0] + h.poly * (*x)[1] != target) continue;
    return PositiveCombination{(*x)[0], (*x)[1], h};
  }
  return std::nullopt;
}

ClassificationReport classify_report(int d, const ClassifyOptions& opts) {
  ClassificationReport rep;
  rep.d = d;
  rep.n = 2 * d;
  auto graphs = enumerate_multigraphs(d);
  rep.total = graphs.size();
  std::vector<SymPoly> polys(graphs.size(), SymPoly(rep.n, d));
  std::vector<CanonicalKey> keys(graphs.size());
  parallel_for(graphs.size(), [&](size_t i) {
    polys[i] = symmetrized_graph_monomial(graphs[i], rep.n);
    keys[i] = canonical_form(graphs[i]);
  });

  // Graphs arrive sorted by key, so the first member of a group is its
  // smallest key and becomes the representative.
  std::map<std::string, size_t> group_of;
  std::vector<std::vector<size_t>> groups;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (polys[i].is_zero()) {
      rep.vanishing.push_back(graphs[i]);
      continue;
    }
    auto [it, fresh] = group_of.emplace(normalized(polys[i]).to_string(), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  for (const auto& g : groups) {
    EquivalenceClass c;
    c.representative = graphs[g.front()];
    c.key = keys[g.front()];
    c.poly = polys[g.front()];
    for (size_t i : g) {
      Rational k = leading(polys[i]) / leading(c.poly);
      if (c.poly * k != polys[i]) throw std::logic_error("grouping produced a non-proportional member");
      c.members.push_back({graphs[i], keys[i], k});
    }
    rep.classes.push_back(std::move(c));
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.key < b.key; });

  parallel_for(rep.classes.size(), [&](size_t ci) {
    auto& c = rep.classes[ci];
    if (d % 2 == 0) {
      for (int sgn : {1, -1}) {
        auto r = cone_membership(c.poly * Rational(sgn), d, rep.n);
        if (r.member) {
          c.label = Label::SquareCone;
          c.orientation = sgn;
          c.cone = r.certificate;
          return;
        }
        (sgn == 1 ? c.farkas_plus : c.farkas_minus) = std::move(r);
      }
    }
    auto sw = sign_witness_search(c.poly, opts.seed);
    if (sw.witness) {
      c.label = Label::SignChanging;
      c.sign = sw.witness;
      return;
    }
    if (sw.negative_point) c.orientation = -1;
    if (d % 2 == 0) {
      for (int tier : opts.sos_tiers) {
        if (tier > rep.n) break;
        auto cert = find_sos(c.oriented(), tier, opts.sos);
        if (cert) {
          c.label = Label::SosCertified;
          c.sos = std::move(cert);
          c.sos_vars = tier;
          return;
        }
      }
    }
    c.label = Label::CandidateLax;
  });
  return rep;
}

Json report_to_json(const ClassificationReport& r) {
  Json vanishing = Json::array();
  for (const auto& g : r.vanishing) vanishing.push_back(canonical_form(g));
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json members = Json::array();
    for (const auto& m : c.members)
      members.push_back({{"key", m.key}, {"graph", graph_to_json(m.graph)}, {"constant", to_string(m.constant)}});
    Json evidence;
    switch (c.label) {
      case Label::SquareCone: {
        Json terms = Json::array();
        for (const auto& t : c.cone->terms) terms.push_back({{"key", t.generator.key}, {"weight", to_string(t.weight)}});
        evidence = {{"cone", terms}};
        break;
      }
      case Label::SignChanging:
        evidence = {{"sign", sign_witness_to_json(*c.sign)}};
        break;
      case Label::SosCertified:
        evidence = {{"sos", {{"vars", c.sos_vars}, {"monomials", c.sos->v.size()}, {"scale", to_string(c.sos->scale)}}}};
        break;
      case Label::CandidateLax:
        evidence = {{"farkas", {{"plus", c.farkas_plus.has_value()}, {"minus", c.farkas_minus.has_value()}}}};
        break;
    }
    classes.push_back({{"representative", c.key},
                       {"graph", graph_to_json(c.representative)},
                       {"label", label_name(c.label)},
                       {"orientation", c.orientation},
                       {"members", members},
                       {"evidence", evidence}});
  }
  Json counts;
  for (Label l : {Label::SquareCone, Label::SignChanging, Label::SosCertified, Label::CandidateLax})
    counts[label_name(l)] = r.count(l);
  return Json{{"d", r.d},         {"n", r.n},
              {"total", r.total}, {"vanishing_count", r.vanishing.size()},
              {"class_count", r.classes.size()}, {"counts", counts},
              {"vanishing", vanishing}, {"classes", classes}};
}

void emit_certificates(const ClassificationReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    Json j{{"representative", c.key}, {"label", label_name(c.label)}, {"target", sympoly_to_json(c.oriented())}};
    if (c.cone) {
      ConeResult cr;
      cr.member = true;
      cr.certificate = *c.cone;
      j["cone"] = cone_result_to_json(cr);
    }
    if (c.sign) j["sign"] = sign_witness_to_json(*c.sign);
    if (c.sos) j["sos"] = sos_to_json(*c.sos);
    if (c.farkas_plus) j["farkas_plus"] = cone_result_to_json(*c.farkas_plus);
    if (c.farkas_minus) j["farkas_minus"] = cone_result_to_json(*c.farkas_minus);
    write_json_file(dir + "/class_" + std::to_string(i + 1) + ".json", j);
  }
}

}  // namespace sgm
