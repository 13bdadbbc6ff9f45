#pragma once

#include <json.hpp>

#include "quot/fiber.hpp"
#include "quot/tangent.hpp"

namespace quot {

nlohmann::json ring_to_json(const Ring& ring);
/// { "vars": [...], "field": "Q"|"Fp:<p>", "order": "lex"|"grevlex" }
Ring ring_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const nlohmann::json& j);

nlohmann::json scalar_matrix_to_json(const ScalarMatrix& m);
/// { "rows": N, "cols": M, "entries": [["<scalar>", ...], ...] }
ScalarMatrix scalar_matrix_from_json(const nlohmann::json& j, Field field);

nlohmann::json quot_point_to_json(const QuotPoint& pt);
/// { "d":, "r":, "chart":[...], "frame": {"gl2": [[...]], "glr": [[...]]},
///   "params": {"w_1_1": "...", ...} }; the frame is optional and defaults
/// to the identity.
QuotPoint quot_point_from_json(const nlohmann::json& j, Field field);

nlohmann::json binary_form_to_json(const BinaryForm& f);  // coeffs y^d -> x^d

nlohmann::json pluecker_to_json(const PlueckerVector& pv);

nlohmann::json tangent_report_to_json(const TangentReport& rep);

nlohmann::json fiber_components_to_json(const std::vector<FiberComponent>& comps);

nlohmann::json multiplicity_profile_to_json(const std::vector<RootMultiplicity>& rows);

/// Parses "w_1_1=0,w_1_2=1/2"; variables of the ring that are not mentioned
/// default to zero.
Assignment assignment_from_string(const std::string& text, const Ring& ring);

}  // namespace quot
