#include "pfe/checks.hpp"

#include <algorithm>
#include <random>

#include "pfe/closed_forms.hpp"
#include "pfe/families.hpp"
#include "pfe/represent.hpp"
#include "pfe/stirling.hpp"

namespace pfe {

namespace {

std::vector<MomentModel> default_models() {
    return {MomentModel::bernoulli(Rational(1, 2)), MomentModel::poisson(Rational(2)),
            MomentModel::geometric(Rational(1, 2)), MomentModel::exponential(Rational(3))};
}

std::vector<Rational> default_u() { return {Rational(1, 2), Rational(-1)}; }

bool orthogonal(const StirlingTable& s2, const StirlingTable& s1) {
    for (unsigned n = 0; n <= s2.nmax(); ++n)
        for (unsigned l = 0; l <= n; ++l) {
            Rational acc(0);
            for (unsigned k = l; k <= n; ++k) acc += s2.value(n, k) * s1.value(k, l);
            if (acc != Rational(n == l ? 1 : 0)) return false;
        }
    return true;
}

Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);
    return Rational(num(rng), den(rng));
}

XPolynomial random_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    unsigned d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& v : c) v = random_small_rational(rng);
    return XPolynomial(std::move(c));
}

}  // namespace

bool SuiteResult::ok() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const auto& l) { return l.second; });
}

void SuiteResult::merge(const SuiteResult& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

SuiteResult suite_orthogonality(unsigned nmax) {
    SuiteResult res;
    for (const auto& m : default_models()) {
        {
            StirlingTable s2 = probabilistic_s2(m, nmax);
            StirlingTable s1 = probabilistic_s1(m, nmax);
            res.add("orthogonality s2y*s1y " + m.describe(), orthogonal(s2, s1));
            res.add("orthogonality s1y*s2y " + m.describe(), orthogonal(s1, s2));
        }
        for (const Rational& lambda : {Rational(1, 4), Rational(1)}) {
            StirlingTable s2 = probabilistic_degenerate_s2(m, lambda, nmax);
            StirlingTable s1 = probabilistic_degenerate_s1(m, lambda, nmax);
            res.add("orthogonality s2yl*s1yl " + m.describe() + " lambda=" + lambda.str(),
                    orthogonal(s2, s1));
            res.add("orthogonality s1yl*s2yl " + m.describe() + " lambda=" + lambda.str(),
                    orthogonal(s1, s2));
        }
    }
    return res;
}

SuiteResult suite_roundtrip(unsigned nmax) {
    SuiteResult res;
    std::mt19937_64 rng(20240917);
    const unsigned max_deg = std::min(nmax, 8u);

    for (const auto& m : default_models()) {
        // Inverse relations on a random sequence.
        {
            StirlingTable s2 = probabilistic_s2(m, nmax);
            StirlingTable s1 = probabilistic_s1(m, nmax);
            std::vector<Rational> b(nmax + 1);
            for (auto& v : b) v = random_small_rational(rng);
            bool ok = true;
            std::vector<Rational> a(nmax + 1);
            for (unsigned n = 0; n <= nmax; ++n)
                for (unsigned k = 0; k <= n; ++k) a[n] += s2.value(n, k) * b[k];
            for (unsigned n = 0; n <= nmax && ok; ++n) {
                Rational back(0);
                for (unsigned k = 0; k <= n; ++k) back += s1.value(n, k) * a[k];
                ok = back == b[n];
            }
            res.add("inverse-relation " + m.describe(), ok);
        }
        for (const Rational& u : default_u()) {
            XPolynomial p = random_poly(rng, max_deg);
            bool ok31 = true;
            BasisExpansion ref31 = expand_thm31(p, m, u, 1);
            for (int formula = 2; formula <= 3; ++formula)
                ok31 = ok31 &&
                       expand_thm31(p, m, u, formula).coefficients == ref31.coefficients;
            ok31 = ok31 && reconstruct(ref31) == p;
            res.add("thm31 roundtrip " + m.describe() + " u=" + u.str(), ok31);

            for (const Rational& lambda : {Rational(0), Rational(1, 4)}) {
                BasisExpansion ref33 = expand_thm33(p, m, u, lambda, 1);
                bool ok33 = reconstruct(ref33) == p;
                for (int formula = 2; formula <= 3; ++formula)
                    ok33 = ok33 && expand_thm33(p, m, u, lambda, formula).coefficients ==
                                       ref33.coefficients;
                res.add("thm33 roundtrip " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        ok33);

                for (unsigned r : {0u, 2u}) {
                    BasisExpansion ref4 = expand_thm4(p, m, u, lambda, r, 1);
                    bool ok4 = reconstruct(ref4) == p;
                    for (int formula = 2; formula <= 4; ++formula)
                        ok4 = ok4 && expand_thm4(p, m, u, lambda, r, formula).coefficients ==
                                         ref4.coefficients;
                    res.add("thm4 roundtrip " + m.describe() + " u=" + u.str() +
                                " lambda=" + lambda.str() + " r=" + std::to_string(r),
                            ok4);
                }
            }
        }
    }
    return res;
}

SuiteResult suite_closedforms(unsigned nmax) {
    SuiteResult res;
    for (const auto& m : default_models()) {
        for (const Rational& lambda : {Rational(0), Rational(1, 4)}) {
            StirlingTable generic = lambda.is_zero()
                                        ? probabilistic_s1(m, nmax)
                                        : probabilistic_degenerate_s1(m, lambda, nmax);
            StirlingTable via_invert =
                table_invert(lambda.is_zero()
                                 ? probabilistic_s2(m, nmax)
                                 : probabilistic_degenerate_s2(m, lambda, nmax));
            StirlingTable closed = model_closed_s1(m, lambda, nmax);
            res.add("s1 dual-path " + m.describe() + " lambda=" + lambda.str(),
                    tables_equal(generic, via_invert) && tables_equal(generic, closed));
        }
        for (const Rational& u : default_u()) {
            for (const Rational& lambda : {Rational(0), Rational(1, 4)}) {
                bool ok = true;
                for (unsigned n = 0; n <= std::min(nmax, 10u) && ok; ++n) {
                    ClosedFormResult cf = closed_falling(m, u, lambda, n);
                    ClosedFormResult cm = closed_monomial(m, u, lambda, n);
                    XPolynomial falling = XPolynomial::falling(n);
                    XPolynomial monomial = XPolynomial::monomial(n, Rational(1));
                    BasisExpansion ef = expand_thm33(falling, m, u, lambda, 1);
                    BasisExpansion em = expand_thm33(monomial, m, u, lambda, 1);
                    ok = cf.coefficients == ef.coefficients &&
                         cm.coefficients == em.coefficients;
                }
                res.add("closed-form expansions " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        ok);
            }
        }
    }
    return res;
}

SuiteResult suite_identities(unsigned nmax) {
    SuiteResult res;
    std::vector<MomentModel> models = default_models();
    models.push_back(MomentModel::unit());
    for (const auto& m : models) {
        for (const Rational& u : default_u()) {
            for (const Rational& lambda : {Rational(0), Rational(1, 4)}) {
                FamilySpec spec{m, u, lambda, 1, nmax};
                PolynomialFamily fam = build_family(spec);

                res.add("boundary " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        family_boundary_check(fam).all_ok());

                bool x0_ok = true;
                for (unsigned n = 1; n <= nmax && x0_ok; ++n)
                    x0_ok = fam.poly(n).eval(Rational(1)) - u * fam.poly(n).eval(Rational(0)) ==
                            Rational(0);
                res.add("x=0 specialization " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        x0_ok);

                res.add("sheffer recurrence " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        sheffer_recurrence_check(fam).all_ok());

                FamilySpec spec2 = spec;
                spec2.order_r = 2;
                res.add("order reduction " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        order_reduction_check(build_family(spec2), fam).all_ok());

                bool pairing_ok = true;
                const unsigned pair_max = std::min(nmax, 6u);
                FamilySpec spec_r2 = spec2;
                spec_r2.nmax = pair_max;
                PolynomialFamily fam_r2 = build_family(spec_r2);
                for (unsigned n = 0; n <= pair_max && pairing_ok; ++n)
                    for (unsigned k = 0; k <= pair_max && pairing_ok; ++k) {
                        Rational expect = n == k ? factorial(n) : Rational(0);
                        pairing_ok = sheffer_pairing(fam_r2, n, k) == expect;
                    }
                res.add("sheffer pairing r=2 " + m.describe() + " u=" + u.str() +
                            " lambda=" + lambda.str(),
                        pairing_ok);
            }
        }
    }
    return res;
}

SuiteResult suite_all(unsigned nmax) {
    SuiteResult res = suite_orthogonality(nmax);
    res.merge(suite_roundtrip(nmax));
    res.merge(suite_closedforms(nmax));
    res.merge(suite_identities(nmax));
    return res;
}

}  // namespace pfe
