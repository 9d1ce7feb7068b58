#include "pfe/moment_model.hpp"

#include <stdexcept>

namespace pfe {

std::string model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::unit: return "unit";
        case ModelKind::bernoulli: return "bernoulli";
        case ModelKind::poisson: return "poisson";
        case ModelKind::geometric: return "geometric";
        case ModelKind::exponential: return "exponential";
        case ModelKind::custom: return "custom";
    }
    return "?";
}

MomentModel MomentModel::unit() {
    return MomentModel(ModelKind::unit, Rational(1), {});
}

MomentModel MomentModel::bernoulli(const Rational& p) {
    if (p <= Rational(0) || p > Rational(1))
        throw std::domain_error("bernoulli: requires 0 < p <= 1");
    return MomentModel(ModelKind::bernoulli, p, {});
}

MomentModel MomentModel::poisson(const Rational& alpha) {
    if (alpha <= Rational(0)) throw std::domain_error("poisson: requires alpha > 0");
    return MomentModel(ModelKind::poisson, alpha, {});
}

MomentModel MomentModel::geometric(const Rational& p) {
    if (p <= Rational(0) || p >= Rational(1))
        throw std::domain_error("geometric: requires 0 < p < 1");
    return MomentModel(ModelKind::geometric, p, {});
}

MomentModel MomentModel::exponential(const Rational& alpha) {
    if (alpha <= Rational(0)) throw std::domain_error("exponential: requires alpha > 0");
    return MomentModel(ModelKind::exponential, alpha, {});
}

MomentModel MomentModel::custom(std::vector<Rational> moments) {
    if (moments.empty() || moments[0] != Rational(1))
        throw std::domain_error("custom model: moments must start with E[Y^0] = 1");
    if (moments.size() < 2 || moments[1].is_zero())
        throw std::domain_error("custom model: requires E[Y] != 0");
    return MomentModel(ModelKind::custom, Rational(0), std::move(moments));
}

Rational MomentModel::raw_moment(unsigned n) const {
    switch (kind_) {
        case ModelKind::unit:
            return Rational(1);
        case ModelKind::bernoulli:
            return n == 0 ? Rational(1) : param_;
        case ModelKind::exponential:
            // E[Y^n] = n!/alpha^n
            return factorial(n) / param_.pow(static_cast<long>(n));
        case ModelKind::poisson:
        case ModelKind::geometric:
            return mgf_series(n).coeff(n);
        case ModelKind::custom:
            if (n >= moments_.size())
                throw std::out_of_range("custom model: moment order " + std::to_string(n) +
                                        " beyond supplied list");
            return moments_[n];
    }
    throw std::logic_error("unreachable");
}

Rational MomentModel::degenerate_moment(unsigned n, const Rational& lambda) const {
    // E[(Y)_{n,lambda}] = sum_k c_k E[Y^k] with (x)_{n,lambda} = sum_k c_k x^k;
    // the c_k are S_1(n,k) lambda^{n-k}.
    XPolynomial dff = XPolynomial::degenerate_falling(n, lambda);
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = dff.coeff(k);
        if (!c.is_zero()) acc += c * raw_moment(k);
    }
    return acc;
}

TruncatedSeries MomentModel::mgf_series(unsigned order) const {
    const unsigned N = order;
    switch (kind_) {
        case ModelKind::unit:
            return TruncatedSeries::exp_t(N);
        case ModelKind::bernoulli: {
            // 1 - p + p e^t
            TruncatedSeries s(N);
            s.set_coeff(0, Rational(1));
            for (size_t n = 1; n <= N; ++n) s.set_coeff(n, param_);
            return s;
        }
        case ModelKind::poisson: {
            // exp(alpha (e^t - 1))
            TruncatedSeries inner(N);
            for (size_t n = 1; n <= N; ++n) inner.set_coeff(n, param_);
            return exp(inner);
        }
        case ModelKind::geometric: {
            // p e^t / (1 - (1-p) e^t); the divisor has constant term p != 0.
            TruncatedSeries num(N);
            TruncatedSeries den(N);
            den.set_coeff(0, param_);
            Rational q = Rational(1) - param_;
            for (size_t n = 0; n <= N; ++n) {
                num.set_coeff(n, param_);
                if (n >= 1) den.set_coeff(n, -q);
            }
            return num * inverse(den);
        }
        case ModelKind::exponential:
        case ModelKind::custom: {
            TruncatedSeries s(N);
            for (size_t n = 0; n <= N; ++n) s.set_coeff(n, raw_moment(n));
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

TruncatedSeries MomentModel::degenerate_mgf_series(const Rational& lambda,
                                                   unsigned order) const {
    if (lambda.is_zero()) return mgf_series(order);
    TruncatedSeries s(order);
    for (size_t n = 0; n <= order; ++n)
        s.set_coeff(n, degenerate_moment(n, lambda));
    return s;
}

std::string MomentModel::describe() const {
    switch (kind_) {
        case ModelKind::unit: return "unit";
        case ModelKind::bernoulli: return "bernoulli(p=" + param_.str() + ")";
        case ModelKind::poisson: return "poisson(alpha=" + param_.str() + ")";
        case ModelKind::geometric: return "geometric(p=" + param_.str() + ")";
        case ModelKind::exponential: return "exponential(alpha=" + param_.str() + ")";
        case ModelKind::custom:
            return "custom(" + std::to_string(moments_.size() - 1) + " moments)";
    }
    return "?";
}

}  // namespace pfe
