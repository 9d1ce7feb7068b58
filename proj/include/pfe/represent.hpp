#pragma once

#include <string>
#include <vector>

#include "pfe/families.hpp"
#include "pfe/moment_model.hpp"
#include "pfe/polynomial.hpp"
#include "pfe/rational.hpp"

namespace pfe {

// Coefficients a_0..a_n of a polynomial in one of the probabilistic
// Frobenius-Euler bases, together with the basis parameters and a tag
// identifying which formula produced them.
struct BasisExpansion {
    FamilySpec spec;
    std::vector<Rational> coefficients;
    std::string source_formula;
};

// Expansion in the order-1, non-degenerate basis. Formulas 1..3: the
// forward-difference form, the derivative form, and the point-evaluation
// form; all three agree.
BasisExpansion expand_thm31(const XPolynomial& p, const MomentModel& m,
                            const Rational& u, int formula);

// Expansion in the order-1 degenerate basis; lambda = 0 reduces to the
// non-degenerate expansion.
BasisExpansion expand_thm33(const XPolynomial& p, const MomentModel& m,
                            const Rational& u, const Rational& lambda, int formula);

// Expansion in the order-r basis (degenerate when lambda != 0).
// Formulas 1..4: the operator form and its binomial-shift,
// forward-difference, and derivative expansions; all four agree.
BasisExpansion expand_thm4(const XPolynomial& p, const MomentModel& m,
                           const Rational& u, const Rational& lambda,
                           unsigned order_r, int formula);

// Sum of a_r * P_r over the basis family; inverse of the expansions.
XPolynomial reconstruct(const BasisExpansion& e);

}  // namespace pfe
