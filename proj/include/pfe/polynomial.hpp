#pragma once

#include <string>
#include <vector>

#include "pfe/rational.hpp"

namespace pfe {

// Dense polynomial in x over Rational, monomial basis a_0..a_d.
// Normalized: no trailing zero coefficients; the zero polynomial stores
// nothing and reports degree -1.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<Rational> coeffs);

    static XPolynomial constant(Rational c);
    static XPolynomial variable();                          // x
    static XPolynomial monomial(unsigned n, Rational c);    // c * x^n
    static XPolynomial falling(unsigned n);                 // (x)_n expanded
    static XPolynomial degenerate_falling(unsigned n, const Rational& lambda);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^j; zero beyond the degree.
    Rational coeff(size_t j) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    XPolynomial derivative(unsigned k = 1) const;
    XPolynomial shifted(const Rational& c) const;  // p(x + c)

    XPolynomial& operator+=(const XPolynomial& o);
    XPolynomial& operator-=(const XPolynomial& o);
    friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
    friend XPolynomial operator*(const Rational& s, const XPolynomial& p);
    XPolynomial pow(unsigned e) const;

    friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPolynomial& a, const XPolynomial& b) { return a.c_ != b.c_; }

    std::string str() const;  // human-readable, for diagnostics

private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace pfe
