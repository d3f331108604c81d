#pragma once

#include <json.hpp>

#include "sgs/census.hpp"
#include "sgs/constructions.hpp"
#include "sgs/int_polynomial.hpp"
#include "sgs/spectral.hpp"
#include "sgs/symmetry.hpp"
#include "sgs/verify.hpp"

namespace sgs {

/// Decimal coefficient strings, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
/// The image array.
nlohmann::json to_json(const VertexPermutation& p);
nlohmann::json to_json(const SymmetryVerdict& v);
/// Full-precision eigenvalues, descending.
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const CensusReport& r);
nlohmann::json to_json(const SuiteReport& r);
/// {n, m, edges: [[u, v, "+"], ...]}
nlohmann::json graph_json(const SignedGraph& g);
/// {construction, parameters, witness_permutation}
nlohmann::json certificate_json(const Construction& c);

}  // namespace sgs
