#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfe/represent.hpp"
#include "pfe/stirling.hpp"

using pfe::BasisExpansion;
using pfe::MomentModel;
using pfe::Rational;
using pfe::XPolynomial;

namespace {

XPolynomial random_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c) v = Rational(num(rng), den(rng));
    return XPolynomial(std::move(c));
}

const std::vector<MomentModel>& section5_models() {
    static const std::vector<MomentModel> models = {
        MomentModel::bernoulli(Rational(1, 2)), MomentModel::poisson(Rational(2)),
        MomentModel::geometric(Rational(1, 2)), MomentModel::exponential(Rational(3))};
    return models;
}

}  // namespace

TEST_CASE("unit model, p = x") {
    for (const Rational& u : {Rational(1, 2), Rational(-1), Rational(3)}) {
        BasisExpansion e = pfe::expand_thm31(XPolynomial::variable(),
                                             MomentModel::unit(), u, 1);
        REQUIRE(e.coefficients.size() == 2);
        CHECK(e.coefficients[0] == Rational(1) / (Rational(1) - u));
        CHECK(e.coefficients[1] == Rational(1));
    }
}

TEST_CASE("constants expand as (c, 0, ..., 0)") {
    XPolynomial c = XPolynomial::constant(Rational(5));
    BasisExpansion e31 =
        pfe::expand_thm31(c, MomentModel::exponential(Rational(3)), Rational(1, 2), 2);
    CHECK(e31.coefficients == std::vector<Rational>{Rational(5)});
    BasisExpansion e4 = pfe::expand_thm4(c, MomentModel::poisson(Rational(2)),
                                         Rational(-1), Rational(1, 4), 3, 1);
    CHECK(e4.coefficients == std::vector<Rational>{Rational(5)});
    BasisExpansion ez = pfe::expand_thm31(XPolynomial(), MomentModel::unit(),
                                          Rational(1, 2), 1);
    CHECK(ez.coefficients == std::vector<Rational>{Rational(0)});
    CHECK(pfe::reconstruct(ez) == XPolynomial());
}

TEST_CASE("u = 1 is rejected") {
    CHECK_THROWS_AS(pfe::expand_thm31(XPolynomial::variable(), MomentModel::unit(),
                                      Rational(1), 1),
                    std::domain_error);
}

TEST_CASE("the three order-1 formulas agree and round-trip") {
    std::mt19937_64 rng(1001);
    for (const auto& m : section5_models()) {
        for (const Rational& u : {Rational(1, 2), Rational(-1)}) {
            XPolynomial p = random_poly(rng, 10);
            BasisExpansion ref = pfe::expand_thm31(p, m, u, 1);
            CHECK(pfe::expand_thm31(p, m, u, 2).coefficients == ref.coefficients);
            CHECK(pfe::expand_thm31(p, m, u, 3).coefficients == ref.coefficients);
            CHECK(pfe::reconstruct(ref) == p);
        }
    }
}

TEST_CASE("degenerate order-1 formulas agree and round-trip") {
    std::mt19937_64 rng(1002);
    Rational lambda(1, 4);
    for (const auto& m : section5_models()) {
        XPolynomial p = random_poly(rng, 8);
        Rational u(1, 2);
        BasisExpansion ref = pfe::expand_thm33(p, m, u, lambda, 1);
        CHECK(pfe::expand_thm33(p, m, u, lambda, 2).coefficients == ref.coefficients);
        CHECK(pfe::expand_thm33(p, m, u, lambda, 3).coefficients == ref.coefficients);
        CHECK(pfe::reconstruct(ref) == p);
        // lambda = 0 path collapses to the non-degenerate theorem
        BasisExpansion at0 = pfe::expand_thm33(p, m, u, Rational(0), 1);
        CHECK(at0.coefficients == pfe::expand_thm31(p, m, u, 1).coefficients);
    }
}

TEST_CASE("order-r formulas agree and round-trip") {
    std::mt19937_64 rng(1003);
    for (const auto& m : section5_models()) {
        for (unsigned r : {0u, 1u, 2u, 3u}) {
            XPolynomial p = random_poly(rng, 7);
            Rational u(-1), lambda(1, 4);
            BasisExpansion ref = pfe::expand_thm4(p, m, u, lambda, r, 1);
            for (int formula = 2; formula <= 4; ++formula)
                CHECK(pfe::expand_thm4(p, m, u, lambda, r, formula).coefficients ==
                      ref.coefficients);
            CHECK(pfe::reconstruct(ref) == p);
        }
    }
}

TEST_CASE("order 1 reduces to the order-1 theorems") {
    std::mt19937_64 rng(1004);
    for (const auto& m : section5_models()) {
        XPolynomial p = random_poly(rng, 8);
        Rational u(1, 2);
        CHECK(pfe::expand_thm4(p, m, u, Rational(0), 1, 1).coefficients ==
              pfe::expand_thm31(p, m, u, 1).coefficients);
        CHECK(pfe::expand_thm4(p, m, u, Rational(1, 4), 1, 1).coefficients ==
              pfe::expand_thm33(p, m, u, Rational(1, 4), 1).coefficients);
    }
}

TEST_CASE("order-0 unit-model expansion of (x)_4 is the first-kind row") {
    BasisExpansion e = pfe::expand_thm4(XPolynomial::falling(4), MomentModel::unit(),
                                        Rational(1, 2), Rational(0), 0, 1);
    pfe::StirlingTable s1 = pfe::classical_s1(4);
    REQUIRE(e.coefficients.size() == 5);
    for (unsigned k = 0; k <= 4; ++k) CHECK(e.coefficients[k] == s1.value(4, k));
}

TEST_CASE("unit-model coefficients match the derivative-evaluation formula") {
    std::mt19937_64 rng(1005);
    for (const Rational& u : {Rational(1, 2), Rational(-1)}) {
        XPolynomial p = random_poly(rng, 10);
        unsigned n = static_cast<unsigned>(p.degree());
        BasisExpansion e = pfe::expand_thm31(p, MomentModel::unit(), u, 1);
        XPolynomial d = p;
        for (unsigned k = 0; k <= n; ++k) {
            Rational expect = (d.eval(Rational(1)) - u * d.eval(Rational(0))) /
                              ((Rational(1) - u) * pfe::factorial(k));
            CHECK(e.coefficients[k] == expect);
            d = d.derivative();
        }
    }
}

TEST_CASE("leading coefficient of the falling factorial expansion is E[Y]^{-n}") {
    for (const auto& m : section5_models()) {
        BasisExpansion e =
            pfe::expand_thm31(XPolynomial::falling(6), m, Rational(1, 2), 1);
        CHECK(e.coefficients[6] == m.mean().pow(-6));
    }
}

TEST_CASE("exponential-model falling factorial matches the closed display") {
    // a_r = S1Y(n,r) + (n/(1-u)) S1Y(n-1,r) with the exponential S1Y
    Rational alpha(3), u(1, 2);
    MomentModel m = MomentModel::exponential(alpha);
    unsigned n = 4;
    auto s1y = [&](long nn, long kk) {
        if (kk < 0 || kk > nn || nn < 0) return Rational(0);
        Rational sign((nn - kk) % 2 == 0 ? 1 : -1);
        return sign * pfe::binomial(nn, kk) *
               pfe::falling_factorial(Rational(nn - 1), static_cast<unsigned>(nn - kk)) *
               alpha.pow(kk);
    };
    BasisExpansion e = pfe::expand_thm31(XPolynomial::falling(n), m, u, 1);
    for (unsigned r = 0; r <= n; ++r) {
        Rational expect =
            s1y(n, r) + Rational(static_cast<long>(n)) / (Rational(1) - u) * s1y(n - 1, r);
        CHECK(e.coefficients[r] == expect);
    }
    CHECK(pfe::reconstruct(e) == XPolynomial::falling(n));
}

TEST_CASE("invalid formula indices are rejected") {
    XPolynomial p = XPolynomial::variable();
    CHECK_THROWS_AS(pfe::expand_thm31(p, MomentModel::unit(), Rational(1, 2), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(pfe::expand_thm4(p, MomentModel::unit(), Rational(1, 2), Rational(0),
                                     1, 5),
                    std::invalid_argument);
}
