#pragma once

#include <string>
#include <vector>

#include "pfe/moment_model.hpp"
#include "pfe/polynomial.hpp"
#include "pfe/rational.hpp"
#include "pfe/series.hpp"
#include "pfe/stirling.hpp"

namespace pfe {

// Parameters selecting one polynomial family: the unit model with
// lambda = 0 and order 1 recovers the classical family.
struct FamilySpec {
    MomentModel model = MomentModel::unit();
    Rational u;             // != 1
    Rational lambda;        // 0 = non-degenerate
    unsigned order_r = 1;
    unsigned nmax = 16;

    void validate() const;
};

class PolynomialFamily {
public:
    PolynomialFamily(FamilySpec spec, std::vector<XPolynomial> polys)
        : spec_(std::move(spec)), polys_(std::move(polys)) {}

    const FamilySpec& spec() const { return spec_; }
    const XPolynomial& poly(size_t n) const { return polys_.at(n); }
    const std::vector<XPolynomial>& polys() const { return polys_; }

private:
    FamilySpec spec_;
    std::vector<XPolynomial> polys_;
};

// P_0..P_nmax from the generating function
// ((1-u)/(A(t)-u))^r * exp(x log A(t)), A the model's (degenerate) MGF.
PolynomialFamily build_family(const FamilySpec& spec);

// A(t): the MGF, or the degenerate MGF when lambda != 0.
TruncatedSeries model_mgf(const MomentModel& m, const Rational& lambda, unsigned order);

// log A(t), a delta series since A(0) = 1.
TruncatedSeries model_log_mgf(const MomentModel& m, const Rational& lambda, unsigned order);

// The delta series f(t) whose compositional inverse is log A(t); the
// families above are Sheffer for (g(t)^r, f(t)).
TruncatedSeries sheffer_f(const MomentModel& m, const Rational& lambda, unsigned order);

// g(t) = (e^t - u)/(1 - u).
TruncatedSeries frobenius_g(unsigned order, const Rational& u);

struct IdentityReport {
    std::string name;
    std::vector<bool> per_n;
    bool all_ok() const;
};

// P_n(x+1) - u P_n(x) = (1-u) sum_k S2Y(n,k) (x)_k, for r = 1 families.
IdentityReport family_boundary_check(const PolynomialFamily& f);

// P^{(r)}_n(x+1) - u P^{(r)}_n(x) = (1-u) P^{(r-1)}_n(x).
IdentityReport order_reduction_check(const PolynomialFamily& f_r,
                                     const PolynomialFamily& f_rminus1);

// f(t) P_n = n P_{n-1}.
IdentityReport sheffer_recurrence_check(const PolynomialFamily& f);

// <g(t)^r f(t)^k | P_n>; equals n! when n = k and 0 otherwise.
Rational sheffer_pairing(const PolynomialFamily& fam, unsigned n, unsigned k);

}  // namespace pfe
