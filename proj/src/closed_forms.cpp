#include "pfe/closed_forms.hpp"

#include <stdexcept>

namespace pfe {

namespace {

StirlingTable s1_type_table(const MomentModel& m, const Rational& lambda, unsigned nmax) {
    return lambda.is_zero() ? probabilistic_s1(m, nmax)
                            : probabilistic_degenerate_s1(m, lambda, nmax);
}

void require_u(const Rational& u) {
    if (u == Rational(1)) throw std::domain_error("closed form: u = 1 is excluded");
}

}  // namespace

ClosedFormResult closed_falling(const MomentModel& m, const Rational& u,
                                const Rational& lambda, unsigned n) {
    require_u(u);
    StirlingTable s1y = s1_type_table(m, lambda, n);
    Rational inv_1mu = Rational(1) / (Rational(1) - u);
    std::vector<Rational> a(n + 1);
    for (unsigned r = 0; r <= n; ++r)
        a[r] = s1y.value(n, r) +
               Rational(static_cast<long>(n)) * inv_1mu *
                   s1y.value(static_cast<long>(n) - 1, r);
    return ClosedFormResult{true, n, u, lambda, std::move(a)};
}

ClosedFormResult closed_monomial(const MomentModel& m, const Rational& u,
                                 const Rational& lambda, unsigned n) {
    require_u(u);
    StirlingTable s1y = s1_type_table(m, lambda, n);
    StirlingTable s2 = classical_s2(n);
    Rational inv_1mu = Rational(1) / (Rational(1) - u);
    std::vector<Rational> a(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        Rational first(0);
        for (unsigned j = r; j <= n; ++j) first += s1y.value(j, r) * s2.value(n, j);
        Rational second(0);
        for (unsigned k = r; k + 1 <= n; ++k) {
            Rational inner(0);
            for (unsigned j = r; j <= k; ++j) inner += s1y.value(j, r) * s2.value(k, j);
            second += binomial(n, k) * inner;
        }
        a[r] = first + inv_1mu * second;
    }
    return ClosedFormResult{false, n, u, lambda, std::move(a)};
}

StirlingTable model_closed_s1(const MomentModel& m, const Rational& lambda, unsigned nmax) {
    const bool degen = !lambda.is_zero();
    StirlingFamily fam = degen ? StirlingFamily::s1_prob_deg : StirlingFamily::s1_prob;
    StirlingTable t(fam, nmax, degen ? std::optional<Rational>(lambda) : std::nullopt, m);

    switch (m.kind()) {
        case ModelKind::bernoulli: {
            // p^{-n} S_1(n,k), degenerate with the degenerate triangle.
            StirlingTable s1 = degen ? degenerate_s1(nmax, lambda) : classical_s1(nmax);
            const Rational& p = m.param();
            for (unsigned n = 0; n <= nmax; ++n) {
                Rational scale = p.pow(-static_cast<long>(n));
                for (unsigned k = 0; k <= n; ++k) t.set_value(n, k, scale * s1.value(n, k));
            }
            return t;
        }
        case ModelKind::poisson: {
            // sum_l alpha^{-l} S_1(l,k) S_1(n,l), the inner factor degenerate.
            StirlingTable s1 = classical_s1(nmax);
            StirlingTable s1_inner = degen ? degenerate_s1(nmax, lambda) : classical_s1(nmax);
            const Rational& alpha = m.param();
            for (unsigned n = 0; n <= nmax; ++n)
                for (unsigned k = 0; k <= n; ++k) {
                    Rational acc(0);
                    for (unsigned l = k; l <= n; ++l)
                        acc += alpha.pow(-static_cast<long>(l)) * s1_inner.value(l, k) *
                               s1.value(n, l);
                    t.set_value(n, k, acc);
                }
            return t;
        }
        case ModelKind::geometric: {
            // sum_l C(n,l) (n-1)_{n-l} p^l (p-1)^{n-l} S_1(l,k).
            StirlingTable s1_inner = degen ? degenerate_s1(nmax, lambda) : classical_s1(nmax);
            const Rational& p = m.param();
            Rational pm1 = p - Rational(1);
            for (unsigned n = 0; n <= nmax; ++n)
                for (unsigned k = 0; k <= n; ++k) {
                    Rational acc(0);
                    for (unsigned l = k; l <= n; ++l)
                        acc += binomial(n, l) *
                               falling_factorial(Rational(static_cast<long>(n) - 1), n - l) *
                               p.pow(static_cast<long>(l)) *
                               pm1.pow(static_cast<long>(n - l)) * s1_inner.value(l, k);
                    t.set_value(n, k, acc);
                }
            return t;
        }
        case ModelKind::exponential: {
            const Rational& alpha = m.param();
            if (!degen) {
                // (-1)^{n-k} C(n,k) (n-1)_{n-k} alpha^k
                for (unsigned n = 0; n <= nmax; ++n)
                    for (unsigned k = 0; k <= n; ++k) {
                        Rational sign((n - k) % 2 == 0 ? 1 : -1);
                        t.set_value(n, k,
                                    sign * binomial(n, k) *
                                        falling_factorial(
                                            Rational(static_cast<long>(n) - 1), n - k) *
                                        alpha.pow(static_cast<long>(k)));
                    }
                return t;
            }
            // sum_l C(n,l) (-1)^{n-l} (n-1)_{n-l} alpha^l lambda^{l-k} S_2(l,k)
            StirlingTable s2 = classical_s2(nmax);
            for (unsigned n = 0; n <= nmax; ++n)
                for (unsigned k = 0; k <= n; ++k) {
                    Rational acc(0);
                    for (unsigned l = k; l <= n; ++l) {
                        Rational sign((n - l) % 2 == 0 ? 1 : -1);
                        acc += sign * binomial(n, l) *
                               falling_factorial(Rational(static_cast<long>(n) - 1), n - l) *
                               alpha.pow(static_cast<long>(l)) *
                               lambda.pow(static_cast<long>(l - k)) * s2.value(l, k);
                    }
                    t.set_value(n, k, acc);
                }
            return t;
        }
        default:
            throw std::invalid_argument("model_closed_s1: no closed form for model " +
                                        m.describe());
    }
}

}  // namespace pfe
