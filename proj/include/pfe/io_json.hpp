#pragma once

#include <string>

#include <json.hpp>

#include "pfe/closed_forms.hpp"
#include "pfe/families.hpp"
#include "pfe/moment_model.hpp"
#include "pfe/represent.hpp"
#include "pfe/stirling.hpp"

namespace pfe {

// All rationals serialize as strings, never as floats.
nlohmann::json model_to_json(const MomentModel& m);
nlohmann::json table_to_json(const StirlingTable& t);
std::string table_to_csv(const StirlingTable& t);
nlohmann::json family_to_json(const PolynomialFamily& f);
nlohmann::json spec_to_json(const FamilySpec& spec);
nlohmann::json expansion_to_json(const BasisExpansion& e, bool verified, bool ok);
nlohmann::json closed_form_to_json(const ClosedFormResult& r, const MomentModel& m);

// {"moments": ["1", "1/2", ...]} -> custom model.
MomentModel custom_model_from_json(const nlohmann::json& doc);

}  // namespace pfe
