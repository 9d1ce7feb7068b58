#include "pfe/io_json.hpp"

#include <sstream>

namespace pfe {

using nlohmann::json;

json model_to_json(const MomentModel& m) {
    json j;
    j["kind"] = model_kind_name(m.kind());
    switch (m.kind()) {
        case ModelKind::bernoulli:
        case ModelKind::geometric:
            j["params"] = {{"p", m.param().str()}};
            break;
        case ModelKind::poisson:
        case ModelKind::exponential:
            j["params"] = {{"alpha", m.param().str()}};
            break;
        default:
            j["params"] = json::object();
    }
    return j;
}

json table_to_json(const StirlingTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    json j;
    j["family"] = stirling_family_name(t.family());
    j["nmax"] = t.nmax();
    if (t.lambda()) j["lambda"] = t.lambda()->str();
    if (t.model()) j["model"] = model_to_json(*t.model());
    j["rows"] = std::move(rows);
    return j;
}

std::string table_to_csv(const StirlingTable& t) {
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            os << row[k].str();
        }
        os << '\n';
    }
    return os.str();
}

json spec_to_json(const FamilySpec& spec) {
    json j;
    j["model"] = model_to_json(spec.model);
    j["u"] = spec.u.str();
    j["lambda"] = spec.lambda.str();
    j["order"] = spec.order_r;
    j["nmax"] = spec.nmax;
    return j;
}

json family_to_json(const PolynomialFamily& f) {
    json polys = json::array();
    for (const auto& p : f.polys()) {
        json coeffs = json::array();
        for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(p.coeff(j).str());
        if (p.is_zero()) coeffs.push_back("0");
        polys.push_back(std::move(coeffs));
    }
    json j;
    j["spec"] = spec_to_json(f.spec());
    j["polys"] = std::move(polys);
    return j;
}

json expansion_to_json(const BasisExpansion& e, bool verified, bool ok) {
    json coeffs = json::array();
    for (const auto& c : e.coefficients) coeffs.push_back(c.str());
    json j;
    j["basis"] = spec_to_json(e.spec);
    j["formula"] = e.source_formula;
    j["coefficients"] = std::move(coeffs);
    if (verified) j["reconstruction_ok"] = ok;
    return j;
}

json closed_form_to_json(const ClosedFormResult& r, const MomentModel& m) {
    json coeffs = json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(c.str());
    json basis;
    basis["model"] = model_to_json(m);
    basis["u"] = r.u.str();
    basis["lambda"] = r.lambda.str();
    basis["order"] = 1;
    basis["nmax"] = r.n;
    json j;
    j["basis"] = std::move(basis);
    j["target"] = r.falling_target ? "falling" : "monomial";
    j["source"] = "closed-form";
    j["coefficients"] = std::move(coeffs);
    return j;
}

MomentModel custom_model_from_json(const json& doc) {
    if (!doc.contains("moments") || !doc["moments"].is_array())
        throw std::invalid_argument("custom model JSON: expected {\"moments\": [...]}");
    std::vector<Rational> moments;
    for (const auto& item : doc["moments"]) {
        if (!item.is_string())
            throw std::invalid_argument("custom model JSON: moments must be strings");
        moments.push_back(Rational::parse(item.get<std::string>()));
    }
    return MomentModel::custom(std::move(moments));
}

}  // namespace pfe
