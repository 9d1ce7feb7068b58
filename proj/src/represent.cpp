#include "pfe/represent.hpp"

#include <stdexcept>

#include "pfe/stirling.hpp"
#include "pfe/umbral.hpp"

namespace pfe {

namespace {

unsigned effective_degree(const XPolynomial& p) {
    return p.is_zero() ? 0u : static_cast<unsigned>(p.degree());
}

void require_u(const Rational& u) {
    if (u == Rational(1)) throw std::domain_error("expansion: u = 1 is excluded");
}

// The three order-1 formulas, shared between the lambda = 0 and
// lambda != 0 theorems; they differ only in the S1-type table used.
std::vector<Rational> order1_coefficients(const XPolynomial& p, const StirlingTable& s1y,
                                          const Rational& u, int formula) {
    const unsigned n = effective_degree(p);
    const Rational inv_1mu = Rational(1) / (Rational(1) - u);
    std::vector<Rational> a(n + 1);

    switch (formula) {
        case 1: {
            // (1/(1-u)) sum_j S1Y(j,r) (1/j!) (D^j p(1) - u D^j p(0)),
            // with D the forward difference, iterated once per j.
            std::vector<Rational> diff_at_1(n + 1), diff_at_0(n + 1);
            XPolynomial d = p;
            for (unsigned j = 0; j <= n; ++j) {
                diff_at_1[j] = d.eval(Rational(1));
                diff_at_0[j] = d.eval(Rational(0));
                if (j < n) d = forward_difference(d, 1);
            }
            for (unsigned r = 0; r <= n; ++r) {
                Rational acc(0);
                for (unsigned j = r; j <= n; ++j)
                    acc += s1y.value(j, r) / factorial(j) * (diff_at_1[j] - u * diff_at_0[j]);
                a[r] = inv_1mu * acc;
            }
            break;
        }
        case 2: {
            // (1/(1-u)) sum_{k} sum_{j<=k} S1Y(j,r) S2(k,j) (1/k!) (p^(k)(1) - u p^(k)(0))
            StirlingTable s2 = classical_s2(n);
            std::vector<Rational> der_at_1(n + 1), der_at_0(n + 1);
            XPolynomial d = p;
            for (unsigned k = 0; k <= n; ++k) {
                der_at_1[k] = d.eval(Rational(1));
                der_at_0[k] = d.eval(Rational(0));
                if (k < n) d = d.derivative();
            }
            for (unsigned r = 0; r <= n; ++r) {
                Rational acc(0);
                for (unsigned k = r; k <= n; ++k) {
                    Rational inner(0);
                    for (unsigned j = r; j <= k; ++j)
                        inner += s1y.value(j, r) * s2.value(k, j);
                    acc += inner / factorial(k) * (der_at_1[k] - u * der_at_0[k]);
                }
                a[r] = inv_1mu * acc;
            }
            break;
        }
        case 3: {
            // (1/(1-u)) sum_j sum_{i<=j} (-1)^{j-i} (1/j!) C(j,i) S1Y(j,r) (p(i+1) - u p(i))
            std::vector<Rational> vals(n + 2);
            for (unsigned i = 0; i <= n + 1; ++i)
                vals[i] = p.eval(Rational(static_cast<long>(i)));
            for (unsigned r = 0; r <= n; ++r) {
                Rational acc(0);
                for (unsigned j = r; j <= n; ++j) {
                    Rational inner(0);
                    for (unsigned i = 0; i <= j; ++i) {
                        Rational sign((j - i) % 2 == 0 ? 1 : -1);
                        inner += sign * binomial(j, i) * (vals[i + 1] - u * vals[i]);
                    }
                    acc += s1y.value(j, r) / factorial(j) * inner;
                }
                a[r] = inv_1mu * acc;
            }
            break;
        }
        default:
            throw std::invalid_argument("order-1 expansion: formula must be 1, 2 or 3");
    }
    return a;
}

}  // namespace

BasisExpansion expand_thm31(const XPolynomial& p, const MomentModel& m,
                            const Rational& u, int formula) {
    require_u(u);
    const unsigned n = effective_degree(p);
    StirlingTable s1y = probabilistic_s1(m, n);
    FamilySpec spec{m, u, Rational(0), 1, n};
    return BasisExpansion{std::move(spec), order1_coefficients(p, s1y, u, formula),
                          "thm31-" + std::to_string(formula)};
}

BasisExpansion expand_thm33(const XPolynomial& p, const MomentModel& m,
                            const Rational& u, const Rational& lambda, int formula) {
    require_u(u);
    const unsigned n = effective_degree(p);
    StirlingTable s1yl = lambda.is_zero() ? probabilistic_s1(m, n)
                                          : probabilistic_degenerate_s1(m, lambda, n);
    FamilySpec spec{m, u, lambda, 1, n};
    return BasisExpansion{std::move(spec), order1_coefficients(p, s1yl, u, formula),
                          "thm33-" + std::to_string(formula)};
}

BasisExpansion expand_thm4(const XPolynomial& p, const MomentModel& m,
                           const Rational& u, const Rational& lambda,
                           unsigned order_r, int formula) {
    require_u(u);
    const unsigned n = effective_degree(p);
    const Rational one_minus_u = Rational(1) - u;
    const unsigned op_order = std::max(n, 1u);
    TruncatedSeries f = sheffer_f(m, lambda, op_order);

    // q_k = f(t)^k p, shared by all four formulas.
    std::vector<XPolynomial> q(n + 1);
    q[0] = p;
    for (unsigned k = 1; k <= n; ++k) q[k] = apply_operator(f, q[k - 1]);

    std::vector<Rational> a(n + 1);
    switch (formula) {
        case 1: {
            // a_k = (1/k!) g(t)^r f(t)^k p(x) |_{x=0}
            TruncatedSeries g_r = series_pow(frobenius_g(op_order, u), order_r);
            for (unsigned k = 0; k <= n; ++k)
                a[k] = pair_functional(g_r, q[k]) / factorial(k);
            break;
        }
        case 2: {
            // a_k = (1/((1-u)^r k!)) sum_i C(r,i) (-u)^{r-i} q_k(i)
            Rational scale = one_minus_u.pow(static_cast<long>(order_r));
            for (unsigned k = 0; k <= n; ++k) {
                Rational acc(0);
                for (unsigned i = 0; i <= order_r; ++i)
                    acc += binomial(order_r, i) * (-u).pow(static_cast<long>(order_r - i)) *
                           q[k].eval(Rational(static_cast<long>(i)));
                a[k] = acc / (scale * factorial(k));
            }
            break;
        }
        case 3: {
            // a_k = (1/k!) sum_i C(r,i) (1-u)^{-i} (Delta^i q_k)(0)
            for (unsigned k = 0; k <= n; ++k) {
                Rational acc(0);
                XPolynomial d = q[k];
                for (unsigned i = 0; i <= order_r; ++i) {
                    acc += binomial(order_r, i) * one_minus_u.pow(-static_cast<long>(i)) *
                           d.eval(Rational(0));
                    if (i < order_r) d = forward_difference(d, 1);
                }
                a[k] = acc / factorial(k);
            }
            break;
        }
        case 4: {
            // a_k = (1/k!) sum_i sum_{m=i}^n (i!/m!) C(r,i) (1-u)^{-i} S2(m,i) q_k^(m)(0)
            StirlingTable s2 = classical_s2(n);
            for (unsigned k = 0; k <= n; ++k) {
                std::vector<Rational> der0(n + 1);
                XPolynomial d = q[k];
                for (unsigned mth = 0; mth <= n; ++mth) {
                    der0[mth] = d.eval(Rational(0));
                    if (mth < n) d = d.derivative();
                }
                Rational acc(0);
                for (unsigned i = 0; i <= order_r; ++i) {
                    if (i > n) break;
                    Rational outer = factorial(i) * binomial(order_r, i) *
                                     one_minus_u.pow(-static_cast<long>(i));
                    Rational inner(0);
                    for (unsigned mth = i; mth <= n; ++mth)
                        inner += s2.value(mth, i) / factorial(mth) * der0[mth];
                    acc += outer * inner;
                }
                a[k] = acc / factorial(k);
            }
            break;
        }
        default:
            throw std::invalid_argument("order-r expansion: formula must be 1..4");
    }
    FamilySpec spec{m, u, lambda, order_r, n};
    return BasisExpansion{std::move(spec), std::move(a),
                          "thm4-" + std::to_string(formula)};
}

XPolynomial reconstruct(const BasisExpansion& e) {
    if (e.coefficients.empty()) return {};
    FamilySpec spec = e.spec;
    spec.nmax = static_cast<unsigned>(e.coefficients.size() - 1);
    PolynomialFamily fam = build_family(spec);
    XPolynomial acc;
    for (size_t r = 0; r < e.coefficients.size(); ++r)
        acc += e.coefficients[r] * fam.poly(r);
    return acc;
}

}  // namespace pfe
