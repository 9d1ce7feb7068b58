#pragma once

#include <string>
#include <vector>

#include "pfe/rational.hpp"
#include "pfe/series.hpp"

namespace pfe {

enum class ModelKind { unit, bernoulli, poisson, geometric, exponential, custom };

std::string model_kind_name(ModelKind k);

// A named random-variable model exposing exact raw moments E[Y^n].
// Construction validates the parameter range and the standing assumption
// E[Y] != 0; models are immutable afterwards.
class MomentModel {
public:
    static MomentModel unit();                          // Y = 1
    static MomentModel bernoulli(const Rational& p);    // 0 < p <= 1
    static MomentModel poisson(const Rational& alpha);  // alpha > 0
    static MomentModel geometric(const Rational& p);    // 0 < p < 1
    static MomentModel exponential(const Rational& alpha);  // alpha > 0
    // moments[n] = E[Y^n] for n = 0..N; requires moments[0] = 1 and
    // moments[1] != 0.
    static MomentModel custom(std::vector<Rational> moments);

    ModelKind kind() const { return kind_; }
    const Rational& param() const { return param_; }

    Rational raw_moment(unsigned n) const;
    Rational mean() const { return raw_moment(1); }

    // E[(Y)_{n,lambda}], from raw moments through the monomial expansion
    // of the degenerate falling factorial.
    Rational degenerate_moment(unsigned n, const Rational& lambda) const;

    // E[e^{Yt}] through the given order; coefficient n is E[Y^n].
    TruncatedSeries mgf_series(unsigned order) const;

    // E[e_lambda^Y(t)] through the given order; coefficient n is
    // E[(Y)_{n,lambda}].
    TruncatedSeries degenerate_mgf_series(const Rational& lambda, unsigned order) const;

    std::string describe() const;

private:
    MomentModel(ModelKind kind, Rational param, std::vector<Rational> moments)
        : kind_(kind), param_(std::move(param)), moments_(std::move(moments)) {}

    ModelKind kind_;
    Rational param_;
    std::vector<Rational> moments_;  // custom models only
};

}  // namespace pfe
