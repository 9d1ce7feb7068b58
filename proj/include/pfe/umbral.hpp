#pragma once

#include "pfe/polynomial.hpp"
#include "pfe/rational.hpp"
#include "pfe/series.hpp"

namespace pfe {

// A power series f(t) = sum a_k t^k/k! acts on polynomials as the
// differential operator sum (a_k/k!) p^(k)(x). The action on a degree-d
// polynomial reads coefficients a_0..a_d, so f.order() >= deg p is required.
XPolynomial apply_operator(const TruncatedSeries& f, const XPolynomial& p);

// <f(t) | p(x)> : apply f and evaluate at x = 0.
Rational pair_functional(const TruncatedSeries& f, const XPolynomial& p);

// e^{yt} as an operator series (coefficients y^k); applying it shifts
// the argument by y.
TruncatedSeries shift_operator(unsigned order, const Rational& y);

// j-th forward difference of p, by the alternating binomial shift sum.
XPolynomial forward_difference(const XPolynomial& p, unsigned j);

}  // namespace pfe
