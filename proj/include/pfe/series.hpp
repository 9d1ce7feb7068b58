#pragma once

#include <vector>

#include "pfe/polynomial.hpp"
#include "pfe/rational.hpp"

namespace pfe {

// Formal power series in t over Rational, truncated at a fixed order N and
// stored against t^n/n! (exponential generating convention). Binary
// operations require equal orders; the caller truncates first.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order) : order_(order), c_(order + 1) {}
    TruncatedSeries(unsigned order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(unsigned order, const Rational& c0);
    static TruncatedSeries identity(unsigned order);  // t
    static TruncatedSeries exp_t(unsigned order);     // e^t

    unsigned order() const { return order_; }
    const Rational& coeff(size_t n) const { return c_.at(n); }
    void set_coeff(size_t n, Rational v) { c_.at(n) = std::move(v); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries truncated(unsigned new_order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    // Cauchy product under the EGF convention: c_n = sum_k C(n,k) a_k b_{n-k}.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    unsigned order_;
    std::vector<Rational> c_;
};

// Multiplicative inverse through order N; requires a nonzero constant term.
TruncatedSeries inverse(const TruncatedSeries& a);

// log(1+a) for a with zero constant term, by the alternating power sum.
TruncatedSeries log1p(const TruncatedSeries& a);

// exp(a) for a with zero constant term.
TruncatedSeries exp(const TruncatedSeries& a);

// outer(inner(t)) for inner with zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse of a delta series (a_0 = 0, a_1 != 0), by an
// order-by-order triangular solve of b(a(t)) = t in exact arithmetic.
TruncatedSeries reversion(const TruncatedSeries& a);

// Integer power a^e through the series' order (e >= 0).
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e);

// Series in t whose coefficients are polynomials in x: sum P_n(x) t^n/n!.
class BivariateSeries {
public:
    explicit BivariateSeries(unsigned order) : order_(order), p_(order + 1) {}
    BivariateSeries(unsigned order, std::vector<XPolynomial> polys);

    unsigned order() const { return order_; }
    const XPolynomial& poly(size_t n) const { return p_.at(n); }
    const std::vector<XPolynomial>& polys() const { return p_; }

private:
    unsigned order_;
    std::vector<XPolynomial> p_;
};

// exp(x * log a) for a with constant term 1: returns P_0..P_N with
// deg P_n <= n and P_0 = 1.
BivariateSeries bivariate_exp_xlog(const TruncatedSeries& a);

// Termwise EGF Cauchy product of a bivariate series with a scalar series.
BivariateSeries bivariate_scale(const BivariateSeries& b, const TruncatedSeries& s);

}  // namespace pfe
