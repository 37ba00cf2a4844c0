#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "sgm/acceptance.hpp"
#include "sgm/bases.hpp"
#include "sgm/classify.hpp"
#include "sgm/cone.hpp"
#include "sgm/discriminant.hpp"
#include "sgm/enumerate.hpp"
#include "sgm/io.hpp"
#include "sgm/parallel.hpp"
#include "sgm/positivity.hpp"
#include "sgm/symgm.hpp"

using namespace sgm;

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative output paths land under $SGM_ARTIFACT_DIR when it is set.
std::string artifact_path(const std::string& p) {
  const char* dir = std::getenv("SGM_ARTIFACT_DIR");
  if (!dir || !*dir || std::filesystem::path(p).is_absolute()) return p;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(artifact_path(out), j);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrized graph monomials: enumeration, bases, discriminants, cones and sums of squares"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  uint64_t seed = 0;
  bool csv = false;
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for every randomized battery");
  app.add_flag("--csv", csv, "CSV summary instead of JSON where supported");

  int d = 0, n = 0, k = 0, vars = 0, iterations = 2000;
  std::string graph_file, target_file, cert_file, out, emit_path, alpha, only, tiers = "4,5,6";

  auto* enumerate = app.add_subcommand("enumerate", "list multigraphs with d edges up to isomorphism");
  enumerate->add_option("--d", d, "edge count")->required();
  enumerate->add_option("--out", out);

  auto* symgm = app.add_subcommand("symgm", "symmetrized graph monomial in the m-basis");
  symgm->add_option("graph", graph_file, "graph JSON")->required()->check(CLI::ExistingFile);
  symgm->add_option("--n", n, "variable count")->required();
  symgm->add_option("--out", out);

  auto* coeff = app.add_subcommand("coeff", "one monomial coefficient, by expansion and by colorings");
  coeff->add_option("graph", graph_file, "graph JSON")->required()->check(CLI::ExistingFile);
  coeff->add_option("--alpha", alpha, "exponent partition, e.g. 3,3")->required();
  coeff->add_option("--n", n, "variable count")->required();

  auto* bases = app.add_subcommand("bases", "change of basis from partition graphs to square graphs");
  bases->add_option("--d", d, "even degree")->required();
  bases->add_option("--n", n, "variable count, at least 2d")->required();
  bases->add_option("--emit", emit_path);

  auto* disc = app.add_subcommand("disc", "discriminant of the k-th derivative of prod (t - x_i)");
  disc->add_option("--n", n)->required();
  disc->add_option("--k", k)->required();
  disc->add_option("--out", out);

  auto* cone = app.add_subcommand("cone", "membership in the cone of symmetrized square graphs");
  cone->add_option("--target", target_file, "SymPoly JSON")->required()->check(CLI::ExistingFile);
  cone->add_option("--d", d)->required();
  cone->add_option("--n", n)->required();
  cone->add_option("--emit", emit_path);

  auto* sos = app.add_subcommand("sos", "sum-of-squares certificates");
  sos->require_subcommand(1);
  auto* sos_verify = sos->add_subcommand("verify", "exact certificate check");
  sos_verify->add_option("--target", target_file)->required()->check(CLI::ExistingFile);
  sos_verify->add_option("--cert", cert_file)->required()->check(CLI::ExistingFile);
  auto* sos_find = sos->add_subcommand("find", "numeric search with exact verification");
  sos_find->add_option("--target", target_file)->required()->check(CLI::ExistingFile);
  sos_find->add_option("--vars", vars, "active variable count")->required();
  sos_find->add_option("--iterations", iterations);
  sos_find->add_option("--out", out);

  auto* classify = app.add_subcommand("classify", "full classification of d-edge graphs at n = 2d");
  classify->add_option("--d", d)->required();
  classify->add_option("--out", out);
  classify->add_option("--emit-certs", emit_path, "directory for per-class certificates");
  classify->add_option("--tiers", tiers, "SOS variable counts, e.g. 4,5,6");
  classify->add_option("--iterations", iterations, "projection iterations per tier");

  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
  acceptance->add_option("--only", only, "comma-separated criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << '\n';
    return 2;
  }
  set_thread_count(threads);

  try {
    if (*enumerate) {
      auto gs = enumerate_multigraphs(d);
      if (csv) {
        std::cout << "index,key,vertices,edges\n";
        for (size_t i = 0; i < gs.size(); ++i)
          std::cout << i + 1 << "," << csv_quote(canonical_form(gs[i])) << "," << gs[i].n_vertices() << ","
                    << csv_quote(describe(gs[i])) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& g : gs) arr.push_back(graph_to_json(g));
        emit(arr, out);
      }
    } else if (*symgm) {
      emit(sympoly_to_json(symmetrized_graph_monomial(graph_from_json(read_json_file(graph_file)), n)), out);
    } else if (*coeff) {
      Multigraph g = graph_from_json(read_json_file(graph_file));
      Partition a = parse_partition(alpha);
      Rational byexp = coeff_of(symmetrized_graph_monomial(g, n), a);
      Rational bycol = coeff_by_coloring(g, a, n);
      if (byexp != bycol) throw CheckFailed("expansion and coloring disagree");
      Json j{{"alpha", a}, {"n", n}, {"coefficient", to_string(byexp)}, {"coloring", to_string(bycol)}};
      if (static_cast<int>(a.size()) <= n)
        j["normalized"] = to_string(byexp / Rational(factorial(static_cast<unsigned>(n - static_cast<int>(a.size())))));
      emit(j, "");
    } else if (*bases) {
      auto m = change_of_basis_matrix(d, n);
      Json order = Json::array(), printed = Json::array();
      for (const auto& a : m.order) {
        order.push_back(a.parts());
        printed.push_back(to_string(printed_basis_diagonal(a)));
      }
      RatMatrix e = RatMatrix::from_rows(m.entries), inv = RatMatrix::from_rows(m.inverse);
      Json j{{"d", d},
             {"n", n},
             {"order", order},
             {"order_rule",
              "ascending by the odd-first comparison on (odd parts descending | even parts descending); a missing part "
              "compares as an even zero"},
             {"layout", "row alpha lists the coordinates of h~_alpha in the basis b~_beta, beta in the same order; "
                        "entries with beta before alpha vanish"},
             {"triangular", m.vanishes_before_diagonal()},
             {"matrix", matrix_to_json(e)},
             {"inverse", matrix_to_json(inv)},
             {"printed_diagonal", printed}};
      if (!m.vanishes_before_diagonal()) throw CheckFailed("change-of-basis matrix is not triangular");
      emit(j, emit_path);
    } else if (*disc) {
      emit(sympoly_to_json(disc_nk(n, k)), out);
    } else if (*cone) {
      SymPoly t = sympoly_from_json(read_json_file(target_file));
      auto r = cone_membership(t, d, n);
      Json j = cone_result_to_json(r);
      j["generator_reading"] = "doubles of every " + std::to_string(d / 2) +
                               "-edge multigraph with at most n non-isolated vertices (edges read as double edges)";
      emit(j, emit_path);
    } else if (*sos_verify) {
      SymPoly t = sympoly_from_json(read_json_file(target_file));
      auto c = sos_from_json(read_json_file(cert_file));
      auto r = verify_sos(t, c);
      Json j{{"valid", r.ok}};
      if (r.ok)
        j["scale"] = to_string(r.scale);
      else
        j["reason"] = r.reason;
      emit(j, "");
      if (!r.ok) throw CheckFailed("certificate rejected: " + r.reason);
    } else if (*sos_find) {
      SymPoly t = sympoly_from_json(read_json_file(target_file));
      SosSearchOptions o;
      o.iterations = iterations;
      o.seed = seed;
      auto c = find_sos(t, vars, o);
      Json j = c ? sos_to_json(*c) : Json{{"found", false}};
      emit(j, out);
    } else if (*classify) {
      ClassifyOptions o;
      o.seed = seed;
      o.sos.seed = seed;
      o.sos.iterations = iterations;
      o.sos_tiers = parse_int_list(tiers);
      auto r = classify_report(d, o);
      if (!emit_path.empty()) emit_certificates(r, artifact_path(emit_path));
      if (csv) {
        std::cout << "class,representative,label,orientation,members\n";
        for (size_t i = 0; i < r.classes.size(); ++i)
          std::cout << i + 1 << "," << csv_quote(r.classes[i].key) << "," << label_name(r.classes[i].label) << ","
                    << r.classes[i].orientation << "," << r.classes[i].members.size() << "\n";
      }
      if (!csv || !out.empty()) emit(report_to_json(r), out);
    } else if (*acceptance) {
      AcceptanceOptions o;
      o.seed = seed;
      o.only = parse_int_list(only);
      auto results = run_acceptance(o);
      std::cout << format_results(results);
      for (const auto& r : results)
        if (!r.pass) return 1;
    }
  } catch (const CheckFailed& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "check_failed"}}.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "invalid_input"}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << '\n';
    return 3;
  }
  return 0;
}
