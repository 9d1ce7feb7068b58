#include "pfe/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfe/umbral.hpp"

namespace pfe {

void FamilySpec::validate() const {
    if (u == Rational(1))
        throw std::domain_error("FamilySpec: u = 1 is excluded (1-u must be invertible)");
}

bool IdentityReport::all_ok() const {
    return std::all_of(per_n.begin(), per_n.end(), [](bool b) { return b; });
}

TruncatedSeries model_mgf(const MomentModel& m, const Rational& lambda, unsigned order) {
    return lambda.is_zero() ? m.mgf_series(order) : m.degenerate_mgf_series(lambda, order);
}

TruncatedSeries model_log_mgf(const MomentModel& m, const Rational& lambda, unsigned order) {
    TruncatedSeries a = model_mgf(m, lambda, order);
    a.set_coeff(0, Rational(0));
    return log1p(a);
}

TruncatedSeries sheffer_f(const MomentModel& m, const Rational& lambda, unsigned order) {
    if (order == 0) return TruncatedSeries(0);
    return reversion(model_log_mgf(m, lambda, order));
}

TruncatedSeries frobenius_g(unsigned order, const Rational& u) {
    if (u == Rational(1)) throw std::domain_error("frobenius_g: u = 1");
    TruncatedSeries g(order);
    Rational inv(Rational(1) / (Rational(1) - u));
    g.set_coeff(0, Rational(1));
    for (unsigned n = 1; n <= order; ++n) g.set_coeff(n, inv);
    return g;
}

PolynomialFamily build_family(const FamilySpec& spec) {
    spec.validate();
    const unsigned N = spec.nmax;
    TruncatedSeries a = model_mgf(spec.model, spec.lambda, N);

    TruncatedSeries denom = a;
    denom.set_coeff(0, a.coeff(0) - spec.u);  // A(t) - u, constant term 1-u
    TruncatedSeries prefactor =
        series_pow((Rational(1) - spec.u) * inverse(denom), spec.order_r);

    BivariateSeries expansion = bivariate_scale(bivariate_exp_xlog(a), prefactor);
    return PolynomialFamily(spec, expansion.polys());
}

IdentityReport family_boundary_check(const PolynomialFamily& f) {
    const FamilySpec& spec = f.spec();
    if (spec.order_r != 1)
        throw std::invalid_argument("family_boundary_check: requires an order-1 family");
    const unsigned N = spec.nmax;
    StirlingTable s2y = spec.lambda.is_zero()
                            ? probabilistic_s2(spec.model, N)
                            : probabilistic_degenerate_s2(spec.model, spec.lambda, N);
    Rational one_minus_u = Rational(1) - spec.u;

    IdentityReport rep{"boundary", {}};
    for (unsigned n = 0; n <= N; ++n) {
        XPolynomial lhs = f.poly(n).shifted(Rational(1)) - spec.u * f.poly(n);
        XPolynomial rhs;
        for (unsigned k = 0; k <= n; ++k)
            rhs += s2y.value(n, k) * XPolynomial::falling(k);
        rep.per_n.push_back(lhs == one_minus_u * rhs);
    }
    return rep;
}

IdentityReport order_reduction_check(const PolynomialFamily& f_r,
                                     const PolynomialFamily& f_rminus1) {
    const FamilySpec& hi = f_r.spec();
    const FamilySpec& lo = f_rminus1.spec();
    if (hi.order_r != lo.order_r + 1 || hi.u != lo.u || hi.lambda != lo.lambda ||
        hi.nmax != lo.nmax || hi.model.describe() != lo.model.describe())
        throw std::invalid_argument("order_reduction_check: specs must differ only by one order");

    Rational one_minus_u = Rational(1) - hi.u;
    IdentityReport rep{"order-reduction", {}};
    for (unsigned n = 0; n <= hi.nmax; ++n) {
        XPolynomial lhs = f_r.poly(n).shifted(Rational(1)) - hi.u * f_r.poly(n);
        rep.per_n.push_back(lhs == one_minus_u * f_rminus1.poly(n));
    }
    return rep;
}

IdentityReport sheffer_recurrence_check(const PolynomialFamily& f) {
    const FamilySpec& spec = f.spec();
    TruncatedSeries op = sheffer_f(spec.model, spec.lambda, std::max(spec.nmax, 1u));

    IdentityReport rep{"sheffer-recurrence", {}};
    for (unsigned n = 0; n <= spec.nmax; ++n) {
        XPolynomial lhs = apply_operator(op, f.poly(n));
        XPolynomial rhs = n == 0 ? XPolynomial()
                                 : Rational(static_cast<long>(n)) * f.poly(n - 1);
        rep.per_n.push_back(lhs == rhs);
    }
    return rep;
}

Rational sheffer_pairing(const PolynomialFamily& fam, unsigned n, unsigned k) {
    const FamilySpec& spec = fam.spec();
    const unsigned order = std::max(n, 1u);
    TruncatedSeries g = frobenius_g(order, spec.u);
    TruncatedSeries f = sheffer_f(spec.model, spec.lambda, order);
    TruncatedSeries op = series_pow(g, spec.order_r) * series_pow(f, k);
    return pair_functional(op, fam.poly(n));
}

}  // namespace pfe
