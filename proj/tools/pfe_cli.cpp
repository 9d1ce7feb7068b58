#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfe/checks.hpp"
#include "pfe/closed_forms.hpp"
#include "pfe/families.hpp"
#include "pfe/io_json.hpp"
#include "pfe/moment_model.hpp"
#include "pfe/poly_parser.hpp"
#include "pfe/represent.hpp"
#include "pfe/stirling.hpp"

namespace {

struct ModelFlags {
    std::string rv = "unit";
    std::vector<std::string> params;
    std::string moments_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rv", rv,
                        "random variable: unit|bernoulli|poisson|geometric|exponential|custom");
        cmd->add_option("--param", params, "model parameter, e.g. --param alpha=2 or --param p=1/2");
        cmd->add_option("--moments-file", moments_file,
                        "JSON file {\"moments\": [\"1\", ...]} for --rv custom");
    }

    pfe::Rational named_param(const std::string& name) const {
        for (const auto& kv : params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--param expects name=value, got \"" + kv + "\"");
            if (kv.substr(0, eq) == name) return pfe::Rational::parse(kv.substr(eq + 1));
        }
        throw std::invalid_argument("missing --param " + name + "=<rational> for --rv " + rv);
    }

    pfe::MomentModel build() const {
        if (rv == "unit") return pfe::MomentModel::unit();
        if (rv == "bernoulli") return pfe::MomentModel::bernoulli(named_param("p"));
        if (rv == "poisson") return pfe::MomentModel::poisson(named_param("alpha"));
        if (rv == "geometric") return pfe::MomentModel::geometric(named_param("p"));
        if (rv == "exponential") return pfe::MomentModel::exponential(named_param("alpha"));
        if (rv == "custom") {
            if (moments_file.empty())
                throw std::invalid_argument("--rv custom requires --moments-file");
            std::ifstream in(moments_file);
            if (!in) throw std::invalid_argument("cannot open " + moments_file);
            nlohmann::json doc;
            in >> doc;
            return pfe::custom_model_from_json(doc);
        }
        throw std::invalid_argument("unknown --rv kind \"" + rv + "\"");
    }
};

int run_stirling(const std::string& family, unsigned nmax, const std::string& lambda_text,
                 const ModelFlags& model_flags, bool explicit_rv, const std::string& format) {
    pfe::Rational lambda = pfe::Rational::parse(lambda_text);
    const bool probabilistic = family == "s1y" || family == "s2y" || family == "s1yl" ||
                               family == "s2yl";
    if (probabilistic && !explicit_rv)
        throw std::invalid_argument("family " + family + " requires --rv");

    std::optional<pfe::StirlingTable> table;
    if (family == "s1") table = pfe::classical_s1(nmax);
    else if (family == "s2") table = pfe::classical_s2(nmax);
    else if (family == "s1l") table = pfe::degenerate_s1(nmax, lambda);
    else if (family == "s2l") table = pfe::degenerate_s2(nmax, lambda);
    else if (family == "s1y") table = pfe::probabilistic_s1(model_flags.build(), nmax);
    else if (family == "s2y") table = pfe::probabilistic_s2(model_flags.build(), nmax);
    else if (family == "s1yl")
        table = pfe::probabilistic_degenerate_s1(model_flags.build(), lambda, nmax);
    else if (family == "s2yl")
        table = pfe::probabilistic_degenerate_s2(model_flags.build(), lambda, nmax);
    else
        throw std::invalid_argument("unknown --family \"" + family + "\"");

    if (format == "csv") std::cout << pfe::table_to_csv(*table);
    else std::cout << pfe::table_to_json(*table).dump(2) << "\n";
    return 0;
}

int run_family(const std::string& u_text, unsigned nmax, const std::string& lambda_text,
               unsigned order, const ModelFlags& model_flags) {
    pfe::FamilySpec spec{model_flags.build(), pfe::Rational::parse(u_text),
                         pfe::Rational::parse(lambda_text), order, nmax};
    spec.validate();
    pfe::PolynomialFamily fam = pfe::build_family(spec);
    std::cout << pfe::family_to_json(fam).dump(2) << "\n";
    return 0;
}

int run_expand(const std::string& poly_text, const std::string& u_text,
               const std::string& lambda_text, unsigned order, int theorem, int formula,
               bool verify, const ModelFlags& model_flags) {
    pfe::XPolynomial p = pfe::parse_poly(poly_text);
    pfe::Rational u = pfe::Rational::parse(u_text);
    pfe::Rational lambda = pfe::Rational::parse(lambda_text);
    pfe::MomentModel model = model_flags.build();

    pfe::BasisExpansion e = [&] {
        switch (theorem) {
            case 31: return pfe::expand_thm31(p, model, u, formula);
            case 33: return pfe::expand_thm33(p, model, u, lambda, formula);
            case 4: return pfe::expand_thm4(p, model, u, lambda, order, formula);
            default:
                throw std::invalid_argument("--theorem must be 31, 33 or 4");
        }
    }();

    bool ok = false;
    if (verify) ok = pfe::reconstruct(e) == p;
    std::cout << pfe::expansion_to_json(e, verify, ok).dump(2) << "\n";
    return verify && !ok ? 1 : 0;
}

int run_closed(const std::string& target, unsigned n, const std::string& u_text,
               const std::string& lambda_text, const ModelFlags& model_flags) {
    pfe::Rational u = pfe::Rational::parse(u_text);
    pfe::Rational lambda = pfe::Rational::parse(lambda_text);
    pfe::MomentModel model = model_flags.build();
    pfe::ClosedFormResult result = [&] {
        if (target == "falling") return pfe::closed_falling(model, u, lambda, n);
        if (target == "monomial") return pfe::closed_monomial(model, u, lambda, n);
        throw std::invalid_argument("--target must be falling or monomial");
    }();
    std::cout << pfe::closed_form_to_json(result, model).dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, unsigned nmax) {
    pfe::SuiteResult res;
    if (suite == "orthogonality") res = pfe::suite_orthogonality(nmax);
    else if (suite == "roundtrip") res = pfe::suite_roundtrip(nmax);
    else if (suite == "closedforms") res = pfe::suite_closedforms(nmax);
    else if (suite == "identities") res = pfe::suite_identities(nmax);
    else if (suite == "all") res = pfe::suite_all(nmax);
    else throw std::invalid_argument("unknown --suite \"" + suite + "\"");

    for (const auto& [name, pass] : res.lines)
        std::cout << (pass ? "ok   " : "FAIL ") << name << "\n";
    std::cout << (res.ok() ? "all checks passed" : "checks FAILED") << "\n";
    return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with probabilistic Frobenius-Euler polynomial families"};
    app.require_subcommand(1);

    // stirling
    auto* stirling = app.add_subcommand("stirling", "emit a Stirling-family table");
    std::string st_family;
    unsigned st_nmax = 8;
    std::string st_lambda = "0";
    std::string st_format = "json";
    ModelFlags st_model;
    stirling->add_option("--family", st_family, "s1|s2|s1l|s2l|s1y|s2y|s1yl|s2yl")->required();
    stirling->add_option("--nmax", st_nmax, "table size")->required();
    stirling->add_option("--lambda", st_lambda, "degeneration parameter (rational)");
    stirling->add_option("--format", st_format, "json|csv");
    st_model.attach(stirling);

    // family
    auto* family = app.add_subcommand("family", "emit a polynomial family");
    std::string fa_u;
    unsigned fa_nmax = 16;
    std::string fa_lambda = "0";
    unsigned fa_order = 1;
    ModelFlags fa_model;
    family->add_option("--u", fa_u, "rational u != 1")->required();
    family->add_option("--nmax", fa_nmax, "highest degree");
    family->add_option("--lambda", fa_lambda, "degeneration parameter (rational)");
    family->add_option("--order", fa_order, "order r >= 0");
    fa_model.attach(family);

    // expand
    auto* expand = app.add_subcommand("expand", "expand a polynomial in a family basis");
    std::string ex_poly, ex_u;
    std::string ex_lambda = "0";
    unsigned ex_order = 1;
    int ex_theorem = 4;
    int ex_formula = 1;
    bool ex_verify = false;
    ModelFlags ex_model;
    expand->add_option("--poly", ex_poly, "polynomial expression in x")->required();
    expand->add_option("--u", ex_u, "rational u != 1")->required();
    expand->add_option("--lambda", ex_lambda, "degeneration parameter (rational)");
    expand->add_option("--order", ex_order, "order r >= 0 (theorem 4)");
    expand->add_option("--theorem", ex_theorem, "31|33|4 (default 4)");
    expand->add_option("--formula", ex_formula, "formula variant (1..3, or 1..4 for theorem 4)");
    expand->add_flag("--verify", ex_verify, "reconstruct and report exact match");
    ex_model.attach(expand);

    // closed
    auto* closed = app.add_subcommand("closed",
                                      "closed-form expansion of (x)_n or x^n in a family basis");
    std::string cl_target, cl_u;
    std::string cl_lambda = "0";
    unsigned cl_n = 0;
    ModelFlags cl_model;
    closed->add_option("--target", cl_target, "falling|monomial")->required();
    closed->add_option("--n", cl_n, "degree of the target")->required();
    closed->add_option("--u", cl_u, "rational u != 1")->required();
    closed->add_option("--lambda", cl_lambda, "degeneration parameter (rational)");
    cl_model.attach(closed);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string ve_suite = "all";
    unsigned ve_nmax = 8;
    verify->add_option("--suite", ve_suite, "orthogonality|roundtrip|closedforms|identities|all");
    verify->add_option("--nmax", ve_nmax, "size bound for the checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stirling->parsed())
            return run_stirling(st_family, st_nmax, st_lambda, st_model,
                                stirling->count("--rv") > 0, st_format);
        if (family->parsed()) return run_family(fa_u, fa_nmax, fa_lambda, fa_order, fa_model);
        if (expand->parsed())
            return run_expand(ex_poly, ex_u, ex_lambda, ex_order, ex_theorem, ex_formula,
                              ex_verify, ex_model);
        if (closed->parsed()) return run_closed(cl_target, cl_n, cl_u, cl_lambda, cl_model);
        if (verify->parsed()) return run_verify(ve_suite, ve_nmax);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
