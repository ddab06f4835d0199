#pragma once

#include <string>

#include <json.hpp>

#include "crg/canonical.hpp"
#include "crg/lift.hpp"
#include "crg/orbit.hpp"

namespace crg::json {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parsing failures of any kind surface as std::invalid_argument.

/// {"perm": [1-based images], "weights": [...]}
Json to_json(const WreathElement& x);
WreathElement element_from_json(const Json& j, const GroupParams& params);

/// {"v":1, "group":"d,e,n", "factors":[element, ...]}
Json to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

/// Plain array of signed 1-based letters.
Json to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

Json to_json(const ClassLabel& label);
Json to_json(const std::vector<ClassLabel>& multiset);
Json to_json(const CanonicalForm& form);
Json to_json(const LiftResult& lift);
Json to_json(const OrbitReport& report);

/// Parses JSON text, mapping syntax errors to std::invalid_argument.
Json parse(const std::string& text);

}  // namespace crg::json
