#include "pfe/series.hpp"

#include <stdexcept>

namespace pfe {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("TruncatedSeries: need exactly order+1 coefficients");
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const Rational& c0) {
    TruncatedSeries s(order);
    s.c_[0] = c0;
    return s;
}

TruncatedSeries TruncatedSeries::identity(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
}

TruncatedSeries TruncatedSeries::exp_t(unsigned order) {
    TruncatedSeries s(order);
    for (auto& c : s.c_) c = Rational(1);
    return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("TruncatedSeries: cannot extend truncation order");
    TruncatedSeries s(new_order);
    for (size_t n = 0; n <= new_order; ++n) s.c_[n] = c_[n];
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(order_);
    for (size_t n = 0; n < c_.size(); ++n) s.c_[n] = -c_[n];
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (size_t n = 0; n < s.c_.size(); ++n) s.c_[n] = a.c_[n] + b.c_[n];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (size_t n = 0; n < s.c_.size(); ++n) s.c_[n] = a.c_[n] - b.c_[n];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (size_t n = 0; n < s.c_.size(); ++n) {
        Rational acc(0);
        for (size_t k = 0; k <= n; ++k)
            acc += binomial(n, k) * a.c_[k] * b.c_[n - k];
        s.c_[n] = std::move(acc);
    }
    return s;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.order_);
    for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = s * a.c_[n];
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::domain_error("series inverse: zero constant term");
    const unsigned N = a.order();
    TruncatedSeries b(N);
    b.set_coeff(0, Rational(1) / a.coeff(0));
    for (size_t n = 1; n <= N; ++n) {
        Rational acc(0);
        for (size_t k = 1; k <= n; ++k)
            acc += binomial(n, k) * a.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, -acc / a.coeff(0));
    }
    return b;
}

TruncatedSeries log1p(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series log1p: nonzero constant term");
    const unsigned N = a.order();
    // log(1+a) = sum_{j>=1} (-1)^{j-1} a^j / j; a^j vanishes below order j.
    TruncatedSeries result(N);
    TruncatedSeries power = TruncatedSeries::constant(N, Rational(1));
    for (unsigned j = 1; j <= N; ++j) {
        power = power * a;
        Rational c = Rational(j % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(j));
        result = result + c * power;
    }
    return result;
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series exp: nonzero constant term");
    const unsigned N = a.order();
    TruncatedSeries result = TruncatedSeries::constant(N, Rational(1));
    TruncatedSeries power = TruncatedSeries::constant(N, Rational(1));
    Rational inv_fact(1);
    for (unsigned j = 1; j <= N; ++j) {
        power = power * a;
        inv_fact /= Rational(static_cast<long>(j));
        result = result + inv_fact * power;
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner);
    if (!inner.coeff(0).is_zero())
        throw std::domain_error("series compose: inner constant term nonzero");
    const unsigned N = outer.order();
    // outer(inner) = sum_j (outer_j/j!) inner^j; inner^j vanishes below order j.
    TruncatedSeries result = TruncatedSeries::constant(N, outer.coeff(0));
    TruncatedSeries power = TruncatedSeries::constant(N, Rational(1));
    Rational inv_fact(1);
    for (unsigned j = 1; j <= N; ++j) {
        power = power * inner;
        inv_fact /= Rational(static_cast<long>(j));
        result = result + (outer.coeff(j) * inv_fact) * power;
    }
    return result;
}

TruncatedSeries reversion(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero() || a.order() < 1 || a.coeff(1).is_zero())
        throw std::domain_error("series reversion: not a delta series");
    const unsigned N = a.order();
    // Solve sum_k (b_k/k!) a(t)^k = t for b, triangular since a^k starts
    // at order k with a nonzero coefficient there.
    std::vector<TruncatedSeries> apow;
    apow.reserve(N + 1);
    apow.push_back(TruncatedSeries::constant(N, Rational(1)));
    for (unsigned k = 1; k <= N; ++k) apow.push_back(apow.back() * a);

    TruncatedSeries b(N);
    Rational fact(1);
    for (unsigned m = 1; m <= N; ++m) {
        Rational rhs = m == 1 ? Rational(1) : Rational(0);
        for (unsigned k = 1; k < m; ++k)
            rhs -= b.coeff(k) / factorial(k) * apow[k].coeff(m);
        fact *= Rational(static_cast<long>(m));
        b.set_coeff(m, rhs * fact / apow[m].coeff(m));
    }
    return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e) {
    TruncatedSeries acc = TruncatedSeries::constant(a.order(), Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

BivariateSeries::BivariateSeries(unsigned order, std::vector<XPolynomial> polys)
    : order_(order), p_(std::move(polys)) {
    if (p_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("BivariateSeries: need exactly order+1 coefficients");
}

BivariateSeries bivariate_exp_xlog(const TruncatedSeries& a) {
    if (a.coeff(0) != Rational(1))
        throw std::domain_error("bivariate_exp_xlog: constant term must be 1");
    const unsigned N = a.order();
    TruncatedSeries shifted = a;
    shifted.set_coeff(0, Rational(0));
    TruncatedSeries lg = log1p(shifted);

    // exp(x L) = sum_j x^j L^j / j!, and L^j vanishes below order j, so
    // P_n(x) = sum_{j<=n} (coeff n of L^j) x^j / j!.
    std::vector<XPolynomial> polys(N + 1);
    std::vector<std::vector<Rational>> acc(N + 1);
    for (unsigned n = 0; n <= N; ++n) acc[n].resize(n + 1);
    TruncatedSeries power = TruncatedSeries::constant(N, Rational(1));
    Rational inv_fact(1);
    for (unsigned n = 0; n <= N; ++n) acc[n][0] = power.coeff(n);  // j = 0 row: 1,0,0,...
    for (unsigned j = 1; j <= N; ++j) {
        power = power * lg;
        inv_fact /= Rational(static_cast<long>(j));
        for (unsigned n = j; n <= N; ++n) acc[n][j] = power.coeff(n) * inv_fact;
    }
    for (unsigned n = 0; n <= N; ++n) polys[n] = XPolynomial(std::move(acc[n]));
    return BivariateSeries(N, std::move(polys));
}

BivariateSeries bivariate_scale(const BivariateSeries& b, const TruncatedSeries& s) {
    if (b.order() != s.order())
        throw std::invalid_argument("bivariate_scale: order mismatch");
    const unsigned N = b.order();
    std::vector<XPolynomial> polys(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        XPolynomial acc;
        for (unsigned k = 0; k <= n; ++k)
            acc += (binomial(n, k) * s.coeff(k)) * b.poly(n - k);
        polys[n] = std::move(acc);
    }
    return BivariateSeries(N, std::move(polys));
}

}  // namespace pfe
