#pragma once

#include <json.hpp>

#include "tetra/construct.hpp"
#include "tetra/extremal.hpp"

namespace tetra::io {

using json = nlohmann::json;

// Complex numbers are [re, im]; polynomials are arrays of those, ascending.

json to_json(cplx z);
json to_json(const Polynomial& p);
json to_json(const TetraPoint& x);
json to_json(const GammaPoint& g);
json to_json(const TetraRational& x);
json to_json(const RoyalNode& node);
json to_json(const ConstructionSpec& spec);

/// Throws nlohmann::json::exception on malformed input.
cplx complex_from(const json& j);
std::vector<cplx> complex_list_from(const json& j);
Polynomial polynomial_from(const json& j);
TetraPoint tetra_point_from(const json& j);
GammaPoint gamma_point_from(const json& j);
ConstructionSpec spec_from(const json& j);

struct RawTriple {
  Polynomial e1, e2, d;
  int n = 0;
};

/// {"n", "E1", "E2", "D"} without validation.
RawTriple raw_triple_from(const json& j);
TetraRational tetra_rational_from(const json& j, ValidationMode mode = ValidationMode::Strict);

/// {"degree", "type", "royal_nodes"}.
json analysis(const TetraRational& x);

}  // namespace tetra::io
