#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pfe/checks.hpp"
#include "pfe/closed_forms.hpp"
#include "pfe/families.hpp"
#include "pfe/moment_model.hpp"
#include "pfe/poly_parser.hpp"
#include "pfe/represent.hpp"
#include "pfe/stirling.hpp"

namespace py = pybind11;
using namespace pfe;

namespace {

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::vector<std::string> poly_to_strings(const XPolynomial& p) {
    if (p.is_zero()) return {"0"};
    return rationals_to_strings(p.coeffs());
}

std::vector<std::vector<std::string>> table_to_strings(const StirlingTable& t) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : t.rows()) rows.push_back(rationals_to_strings(row));
    return rows;
}

StirlingTable make_table(const std::string& family, unsigned nmax, const std::string& lambda,
                         const std::optional<MomentModel>& model) {
    Rational lam = Rational::parse(lambda);
    auto need_model = [&]() -> const MomentModel& {
        if (!model) throw std::invalid_argument("family " + family + " requires a model");
        return *model;
    };
    if (family == "s1") return classical_s1(nmax);
    if (family == "s2") return classical_s2(nmax);
    if (family == "s1l") return degenerate_s1(nmax, lam);
    if (family == "s2l") return degenerate_s2(nmax, lam);
    if (family == "s1y") return probabilistic_s1(need_model(), nmax);
    if (family == "s2y") return probabilistic_s2(need_model(), nmax);
    if (family == "s1yl") return probabilistic_degenerate_s1(need_model(), lam, nmax);
    if (family == "s2yl") return probabilistic_degenerate_s2(need_model(), lam, nmax);
    throw std::invalid_argument("unknown stirling family \"" + family + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact probabilistic Frobenius-Euler polynomial computations";

    py::class_<MomentModel>(m, "MomentModel")
        .def_static("unit", &MomentModel::unit)
        .def_static("bernoulli",
                    [](const std::string& p) { return MomentModel::bernoulli(Rational::parse(p)); })
        .def_static("poisson",
                    [](const std::string& a) { return MomentModel::poisson(Rational::parse(a)); })
        .def_static("geometric",
                    [](const std::string& p) { return MomentModel::geometric(Rational::parse(p)); })
        .def_static("exponential",
                    [](const std::string& a) {
                        return MomentModel::exponential(Rational::parse(a));
                    })
        .def_static("custom",
                    [](const std::vector<std::string>& moments) {
                        std::vector<Rational> ms;
                        ms.reserve(moments.size());
                        for (const auto& s : moments) ms.push_back(Rational::parse(s));
                        return MomentModel::custom(std::move(ms));
                    })
        .def("raw_moment",
             [](const MomentModel& mm, unsigned n) { return mm.raw_moment(n).str(); })
        .def("degenerate_moment",
             [](const MomentModel& mm, unsigned n, const std::string& lam) {
                 return mm.degenerate_moment(n, Rational::parse(lam)).str();
             })
        .def("mgf_coeffs",
             [](const MomentModel& mm, unsigned order) {
                 return rationals_to_strings(mm.mgf_series(order).coeffs());
             })
        .def("describe", &MomentModel::describe)
        .def("__repr__", [](const MomentModel& mm) { return "MomentModel(" + mm.describe() + ")"; });

    m.def("rational", [](const std::string& text) { return Rational::parse(text).str(); },
          "parse and normalize a rational literal");

    m.def("falling_factorial",
          [](const std::string& x, unsigned n) {
              return falling_factorial(Rational::parse(x), n).str();
          });

    m.def("degenerate_falling_factorial",
          [](const std::string& x, unsigned n, const std::string& lam) {
              return degenerate_falling_factorial(Rational::parse(x), n, Rational::parse(lam))
                  .str();
          });

    m.def("parse_poly",
          [](const std::string& text) { return poly_to_strings(parse_poly(text)); },
          "parse a polynomial expression; returns monomial coefficients low to high");

    m.def("stirling_table", &make_table, py::arg("family"), py::arg("nmax"),
          py::arg("lambda_") = "0", py::arg("model") = std::nullopt,
          "rows of the requested Stirling-family table");
    m.def("stirling_rows",
          [](const std::string& family, unsigned nmax, const std::string& lambda,
             const std::optional<MomentModel>& model) {
              return table_to_strings(make_table(family, nmax, lambda, model));
          },
          py::arg("family"), py::arg("nmax"), py::arg("lambda_") = "0",
          py::arg("model") = std::nullopt);

    py::class_<StirlingTable>(m, "StirlingTable")
        .def_property_readonly("nmax", &StirlingTable::nmax)
        .def("value",
             [](const StirlingTable& t, long n, long k) { return t.value(n, k).str(); })
        .def("rows", [](const StirlingTable& t) { return table_to_strings(t); });

    m.def("family",
          [](const std::string& u, unsigned nmax, const std::string& lambda, unsigned order,
             const std::optional<MomentModel>& model) {
              FamilySpec spec{model ? *model : MomentModel::unit(), Rational::parse(u),
                              Rational::parse(lambda), order, nmax};
              PolynomialFamily fam = build_family(spec);
              std::vector<std::vector<std::string>> out;
              for (const auto& p : fam.polys()) out.push_back(poly_to_strings(p));
              return out;
          },
          py::arg("u"), py::arg("nmax"), py::arg("lambda_") = "0", py::arg("order") = 1,
          py::arg("model") = std::nullopt,
          "monomial coefficients of P_0..P_nmax, low to high");

    m.def("expand",
          [](const std::string& poly, const std::string& u, const std::string& lambda,
             unsigned order, int theorem, int formula, bool verify,
             const std::optional<MomentModel>& model) {
              XPolynomial p = parse_poly(poly);
              MomentModel mm = model ? *model : MomentModel::unit();
              Rational uu = Rational::parse(u);
              Rational lam = Rational::parse(lambda);
              BasisExpansion e = [&] {
                  switch (theorem) {
                      case 31: return expand_thm31(p, mm, uu, formula);
                      case 33: return expand_thm33(p, mm, uu, lam, formula);
                      case 4: return expand_thm4(p, mm, uu, lam, order, formula);
                      default: throw std::invalid_argument("theorem must be 31, 33 or 4");
                  }
              }();
              py::dict out;
              out["formula"] = e.source_formula;
              out["coefficients"] = rationals_to_strings(e.coefficients);
              if (verify) out["reconstruction_ok"] = reconstruct(e) == p;
              return out;
          },
          py::arg("poly"), py::arg("u"), py::arg("lambda_") = "0", py::arg("order") = 1,
          py::arg("theorem") = 4, py::arg("formula") = 1, py::arg("verify") = false,
          py::arg("model") = std::nullopt);

    m.def("closed_falling",
          [](const MomentModel& mm, const std::string& u, const std::string& lambda,
             unsigned n) {
              return rationals_to_strings(
                  closed_falling(mm, Rational::parse(u), Rational::parse(lambda), n)
                      .coefficients);
          });

    m.def("closed_monomial",
          [](const MomentModel& mm, const std::string& u, const std::string& lambda,
             unsigned n) {
              return rationals_to_strings(
                  closed_monomial(mm, Rational::parse(u), Rational::parse(lambda), n)
                      .coefficients);
          });

    m.def("verify_suite",
          [](const std::string& suite, unsigned nmax) {
              SuiteResult res;
              if (suite == "orthogonality") res = suite_orthogonality(nmax);
              else if (suite == "roundtrip") res = suite_roundtrip(nmax);
              else if (suite == "closedforms") res = suite_closedforms(nmax);
              else if (suite == "identities") res = suite_identities(nmax);
              else if (suite == "all") res = suite_all(nmax);
              else throw std::invalid_argument("unknown suite \"" + suite + "\"");
              py::dict out;
              out["ok"] = res.ok();
              py::list lines;
              for (const auto& [name, pass] : res.lines)
                  lines.append(py::make_tuple(name, pass));
              out["lines"] = std::move(lines);
              return out;
          },
          py::arg("suite") = "all", py::arg("nmax") = 8);
}
