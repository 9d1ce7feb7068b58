#pragma once

#include <vector>

#include "pfe/moment_model.hpp"
#include "pfe/rational.hpp"
#include "pfe/stirling.hpp"

namespace pfe {

// Closed-form expansion coefficients of (x)_n or x^n in the order-1
// probabilistic (degenerate) basis; matches the generic expansion engine.
struct ClosedFormResult {
    bool falling_target;  // (x)_n when true, x^n otherwise
    unsigned n;
    Rational u;
    Rational lambda;
    std::vector<Rational> coefficients;
};

// a_r = S1Y(n,r) + (n/(1-u)) S1Y(n-1,r), with the S1-type table of the
// degenerate family when lambda != 0.
ClosedFormResult closed_falling(const MomentModel& m, const Rational& u,
                                const Rational& lambda, unsigned n);

// a_r = sum_j S1Y(j,r) S2(n,j)
//       + (1/(1-u)) sum_{k<n} sum_{j<=k} C(n,k) S1Y(j,r) S2(k,j),
// the inner sum empty when r = n.
ClosedFormResult closed_monomial(const MomentModel& m, const Rational& u,
                                 const Rational& lambda, unsigned n);

// Model-specific closed forms for the S1-type probabilistic tables of the
// bernoulli, poisson, geometric and exponential models.
StirlingTable model_closed_s1(const MomentModel& m, const Rational& lambda, unsigned nmax);

}  // namespace pfe
