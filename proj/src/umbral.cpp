#include "pfe/umbral.hpp"

#include <stdexcept>

namespace pfe {

XPolynomial apply_operator(const TruncatedSeries& f, const XPolynomial& p) {
    if (p.is_zero()) return {};
    const unsigned d = static_cast<unsigned>(p.degree());
    if (f.order() < d)
        throw std::invalid_argument("apply_operator: operator order below polynomial degree");
    XPolynomial result;
    XPolynomial deriv = p;
    Rational inv_fact(1);
    for (unsigned k = 0; k <= d; ++k) {
        if (k > 0) {
            deriv = deriv.derivative();
            inv_fact /= Rational(static_cast<long>(k));
        }
        if (!f.coeff(k).is_zero()) result += (f.coeff(k) * inv_fact) * deriv;
    }
    return result;
}

Rational pair_functional(const TruncatedSeries& f, const XPolynomial& p) {
    return apply_operator(f, p).eval(Rational(0));
}

TruncatedSeries shift_operator(unsigned order, const Rational& y) {
    TruncatedSeries s(order);
    Rational acc(1);
    for (unsigned k = 0; k <= order; ++k) {
        s.set_coeff(k, acc);
        acc *= y;
    }
    return s;
}

XPolynomial forward_difference(const XPolynomial& p, unsigned j) {
    if (j == 0) return p;
    if (p.is_zero()) return {};
    const unsigned order = static_cast<unsigned>(p.degree());
    XPolynomial acc;
    for (unsigned i = 0; i <= j; ++i) {
        Rational sign((j - i) % 2 == 0 ? 1 : -1);
        acc += (sign * binomial(j, i)) *
               apply_operator(shift_operator(order, Rational(static_cast<long>(i))), p);
    }
    return acc;
}

}  // namespace pfe
