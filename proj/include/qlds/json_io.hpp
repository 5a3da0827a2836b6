#pragma once

#include <nlohmann/json.hpp>

#include "qlds/additivity.hpp"
#include "qlds/chsh.hpp"
#include "qlds/dempster.hpp"
#include "qlds/subspace.hpp"

namespace qlds {

using Json = nlohmann::json;

// Matrix wire format: {"rows": r, "cols": c, "data": [[re, im], ...]} with
// data in row-major order. Round-trips doubles exactly.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// {"ambient_dim": d, "basis": <matrix>}.
Json subspace_to_json(const Subspace& h);
Subspace subspace_from_json(const Json& j,
                            const Tolerance& tol = session_tolerance());

// {"frame_size": n, "masses": [{"subset": mask, "weight": w}, ...]}.
Json mass_function_to_json(const MassFunction& m);
MassFunction mass_function_from_json(const Json& j);

// {"d_scalar", "verdict", "epsilon", "lambda_min", "lambda_max", "residuals",
//  "operator_nonzero"}.
Json classification_to_json(const PairClassification& c,
                            const AdditivityIdentities& identities);

Json identities_to_json(const AdditivityIdentities& r);
Json table1_to_json(const Table1Report& r);
Json probability_table_to_json(const ProbabilityTable& t);

}  // namespace qlds
