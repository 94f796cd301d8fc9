#pragma once

#include <string>

#include <json.hpp>

#include "qi/generators.hpp"
#include "qi/identities.hpp"
#include "qi/invariant_eval.hpp"
#include "qi/trace_poly.hpp"

namespace qi {

using json = nlohmann::json;

/// Parse failures and unknown or missing keys throw SchemaError. Validity of the
/// setting itself is not checked here.
MixedQuiverSetting setting_from_json(const json& j);
json to_json(const MixedQuiverSetting& s);

/// Entries are strings ("num/den", or decimal integers) or JSON integers.
Matrix matrix_from_json(const json& j, const Field& f);
json to_json(const Matrix& m);

/// Object keyed by base arrow id; every arrow must be present with the right shape.
Representation representation_from_json(const json& j, const MixedQuiverSetting& s, const Field& f);
json to_json(const MixedQuiverSetting& s, const Representation& rep);

Tableau tableau_from_json(const json& j);
json to_json(const Tableau& t);

json word_to_json(const MixedQuiverSetting& s, const Word& w);
Word word_from_json(const MixedQuiverSetting& s, const json& j);

json to_json(const MixedQuiverSetting& s, const GeneratorDescriptor& d);
GeneratorDescriptor descriptor_from_json(const MixedQuiverSetting& s, const json& j);
json to_json(const GeneratorSet& gs);

json to_json(const MixedQuiverSetting& s, const TracePolynomial& p);
TracePolynomial trace_polynomial_from_json(const MixedQuiverSetting& s, const json& j, const Field& f);

json to_json(const Fingerprint& fp);
json to_json(const Separation& sep);
json to_json(const InvarianceReport& r);
json to_json(const IdentityReport& r);

/// Reads and parses a JSON file; I/O and syntax errors throw SchemaError.
json read_json_file(const std::string& path);

}  // namespace qi
