#pragma once

#include <json.hpp>

#include "sgm/cone.hpp"
#include "sgm/multigraph.hpp"
#include "sgm/positivity.hpp"
#include "sgm/ratmatrix.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

using Json = nlohmann::ordered_json;

/// {"n": int, "edges": [[i, j, mult], ...]} with 1-based vertices, edges sorted.
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

/// {"n": int, "degree": int, "terms": [[[parts...], "p/q"], ...]}.
Json sympoly_to_json(const SymPoly& s);
SymPoly sympoly_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

/// {"v": [[exponents...], ...], "Q": [["p/q", ...], ...], "scale": "p/q"}.
Json sos_to_json(const SosCertificate& c);
SosCertificate sos_from_json(const Json& j);

Json cone_result_to_json(const ConeResult& r);
Json sign_witness_to_json(const SignWitness& w);

/// Parse helpers that turn nlohmann's type errors into std::invalid_argument.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace sgm
