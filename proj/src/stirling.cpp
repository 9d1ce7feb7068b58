#include "pfe/stirling.hpp"

#include <stdexcept>

namespace pfe {

std::string stirling_family_name(StirlingFamily f) {
    switch (f) {
        case StirlingFamily::s1: return "s1";
        case StirlingFamily::s2: return "s2";
        case StirlingFamily::s1_deg: return "s1l";
        case StirlingFamily::s2_deg: return "s2l";
        case StirlingFamily::s1_prob: return "s1y";
        case StirlingFamily::s2_prob: return "s2y";
        case StirlingFamily::s1_prob_deg: return "s1yl";
        case StirlingFamily::s2_prob_deg: return "s2yl";
    }
    return "?";
}

StirlingTable::StirlingTable(StirlingFamily family, unsigned nmax,
                             std::optional<Rational> lambda,
                             std::optional<MomentModel> model)
    : family_(family), nmax_(nmax), lambda_(std::move(lambda)), model_(std::move(model)) {
    rows_.resize(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) rows_[n].resize(n + 1);
}

Rational StirlingTable::value(long n, long k) const {
    if (k < 0 || k > n || n < 0) return Rational(0);
    if (n > static_cast<long>(nmax_))
        throw std::out_of_range("StirlingTable: n beyond nmax");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void StirlingTable::set_value(unsigned n, unsigned k, Rational v) {
    rows_.at(n).at(k) = std::move(v);
}

StirlingTable classical_s2(unsigned nmax) {
    StirlingTable t(StirlingFamily::s2, nmax, std::nullopt, std::nullopt);
    t.set_value(0, 0, Rational(1));
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            t.set_value(n, k,
                        Rational(static_cast<long>(k)) * t.value(n - 1, k) +
                            t.value(n - 1, k - 1));
    return t;
}

StirlingTable classical_s1(unsigned nmax) {
    StirlingTable t(StirlingFamily::s1, nmax, std::nullopt, std::nullopt);
    t.set_value(0, 0, Rational(1));
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            t.set_value(n, k,
                        t.value(n - 1, k - 1) -
                            Rational(static_cast<long>(n - 1)) * t.value(n - 1, k));
    return t;
}

namespace {

// Fill column k with the EGF coefficients of s^k/k! for a delta series s.
StirlingTable table_from_delta_series(StirlingFamily family, unsigned nmax,
                                      std::optional<Rational> lambda,
                                      std::optional<MomentModel> model,
                                      const TruncatedSeries& s) {
    StirlingTable t(family, nmax, std::move(lambda), std::move(model));
    TruncatedSeries power = TruncatedSeries::constant(nmax, Rational(1));
    Rational inv_fact(1);
    t.set_value(0, 0, Rational(1));
    for (unsigned k = 1; k <= nmax; ++k) {
        power = power * s;
        inv_fact /= Rational(static_cast<long>(k));
        for (unsigned n = k; n <= nmax; ++n)
            t.set_value(n, k, power.coeff(n) * inv_fact);
    }
    return t;
}

TruncatedSeries degenerate_exp_minus_one(unsigned order, const Rational& lambda) {
    TruncatedSeries s(order);
    for (unsigned n = 1; n <= order; ++n)
        s.set_coeff(n, degenerate_falling_factorial(Rational(1), n, lambda));
    return s;
}

}  // namespace

StirlingTable degenerate_s2(unsigned nmax, const Rational& lambda) {
    return table_from_delta_series(StirlingFamily::s2_deg, nmax, lambda, std::nullopt,
                                   degenerate_exp_minus_one(nmax, lambda));
}

StirlingTable degenerate_s1(unsigned nmax, const Rational& lambda) {
    StirlingTable inv = table_invert(degenerate_s2(nmax, lambda));
    return inv;
}

StirlingTable probabilistic_s2(const MomentModel& m, unsigned nmax) {
    TruncatedSeries e_y = m.mgf_series(nmax);
    e_y.set_coeff(0, Rational(0));
    return table_from_delta_series(StirlingFamily::s2_prob, nmax, std::nullopt, m, e_y);
}

StirlingTable probabilistic_s1(const MomentModel& m, unsigned nmax) {
    TruncatedSeries e_y = m.mgf_series(nmax);
    e_y.set_coeff(0, Rational(0));
    if (nmax == 0) {
        StirlingTable t(StirlingFamily::s1_prob, 0, std::nullopt, m);
        t.set_value(0, 0, Rational(1));
        return t;
    }
    return table_from_delta_series(StirlingFamily::s1_prob, nmax, std::nullopt, m,
                                   reversion(e_y));
}

StirlingTable probabilistic_degenerate_s2(const MomentModel& m, const Rational& lambda,
                                          unsigned nmax) {
    TruncatedSeries e_yl = m.degenerate_mgf_series(lambda, nmax);
    e_yl.set_coeff(0, Rational(0));
    return table_from_delta_series(StirlingFamily::s2_prob_deg, nmax, lambda, m, e_yl);
}

StirlingTable probabilistic_degenerate_s1(const MomentModel& m, const Rational& lambda,
                                          unsigned nmax) {
    TruncatedSeries e_yl = m.degenerate_mgf_series(lambda, nmax);
    e_yl.set_coeff(0, Rational(0));
    if (nmax == 0) {
        StirlingTable t(StirlingFamily::s1_prob_deg, 0, lambda, m);
        t.set_value(0, 0, Rational(1));
        return t;
    }
    return table_from_delta_series(StirlingFamily::s1_prob_deg, nmax, lambda, m,
                                   reversion(e_yl));
}

Rational probabilistic_s2_direct(const MomentModel& m, unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    // (1/k!) sum_j C(k,j) (-1)^{k-j} E[S_j^n], with E[S_j^n] the n-th EGF
    // coefficient of the j-th MGF power.
    TruncatedSeries mgf = m.mgf_series(n);
    TruncatedSeries power = TruncatedSeries::constant(n, Rational(1));
    Rational acc(0);
    for (unsigned j = 0; j <= k; ++j) {
        if (j > 0) power = power * mgf;
        Rational sign((k - j) % 2 == 0 ? 1 : -1);
        acc += sign * binomial(k, j) * power.coeff(n);
    }
    return acc / factorial(k);
}

StirlingTable table_invert(const StirlingTable& t) {
    StirlingFamily inv_family;
    switch (t.family()) {
        case StirlingFamily::s1: inv_family = StirlingFamily::s2; break;
        case StirlingFamily::s2: inv_family = StirlingFamily::s1; break;
        case StirlingFamily::s1_deg: inv_family = StirlingFamily::s2_deg; break;
        case StirlingFamily::s2_deg: inv_family = StirlingFamily::s1_deg; break;
        case StirlingFamily::s1_prob: inv_family = StirlingFamily::s2_prob; break;
        case StirlingFamily::s2_prob: inv_family = StirlingFamily::s1_prob; break;
        case StirlingFamily::s1_prob_deg: inv_family = StirlingFamily::s2_prob_deg; break;
        case StirlingFamily::s2_prob_deg: inv_family = StirlingFamily::s1_prob_deg; break;
        default: throw std::logic_error("unreachable");
    }
    const unsigned nmax = t.nmax();
    for (unsigned n = 0; n <= nmax; ++n)
        if (t.value(n, n).is_zero())
            throw std::domain_error("table_invert: zero diagonal entry");

    StirlingTable inv(inv_family, nmax, t.lambda(), t.model());
    for (unsigned l = 0; l <= nmax; ++l) {
        inv.set_value(l, l, Rational(1) / t.value(l, l));
        for (unsigned n = l + 1; n <= nmax; ++n) {
            Rational acc(0);
            for (unsigned k = l; k < n; ++k) acc += t.value(n, k) * inv.value(k, l);
            inv.set_value(n, l, -acc / t.value(n, n));
        }
    }
    return inv;
}

bool tables_equal(const StirlingTable& a, const StirlingTable& b) {
    if (a.nmax() != b.nmax()) return false;
    for (unsigned n = 0; n <= a.nmax(); ++n)
        for (unsigned k = 0; k <= n; ++k)
            if (a.value(n, k) != b.value(n, k)) return false;
    return true;
}

}  // namespace pfe
