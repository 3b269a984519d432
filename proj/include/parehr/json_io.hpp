#pragma once

#include <json.hpp>

#include <string>

#include "parehr/mpoly.hpp"
#include "parehr/pipeline.hpp"
#include "parehr/polytope.hpp"

namespace parehr {

// Polytope files: {"A": [[1,-1],...], "b0": [3,5,...], "labels": ["b12",...]}
// (labels optional, rename the B-block in all output).
struct PolytopeInput {
    HPolytope polytope;
    VarTable vars;
};
PolytopeInput polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const HPolytope& P, const VarTable& vars);

// Weight files: {"d": 2, "terms": [{"coeff": "-3", "exponents": [1, 0]}, ...]}
// with exponents over the X-block.
MPoly weight_from_json(const nlohmann::json& j, int expected_d = -1);
nlohmann::json weight_to_json(const MPoly& w, int d);

// Polynomials: {"terms": [{"coeff": "1/24", "monomial": {"b12": 4}}, ...]}
// in canonical term order.
nlohmann::json mpoly_to_json(const MPoly& p, const VarTable& vars);
MPoly mpoly_from_json(const nlohmann::json& j, const VarTable& vars);

nlohmann::json upoly_to_json(const UPoly& p);

nlohmann::json ehrhart_to_json(const EhrhartPoly& e);
nlohmann::json hstar_to_json(const HStarData& h);

}  // namespace parehr
