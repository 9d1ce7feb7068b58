#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfe/families.hpp"
#include "pfe/umbral.hpp"

using pfe::FamilySpec;
using pfe::MomentModel;
using pfe::PolynomialFamily;
using pfe::Rational;
using pfe::XPolynomial;

namespace {

// closed forms of the classical x=0 column for n <= 3
std::vector<Rational> frobenius_euler_numbers(const Rational& u) {
    Rational d = Rational(1) - u;
    return {Rational(1), Rational(-1) / d, (Rational(1) + u) / (d * d),
            -(u * u + Rational(4) * u + Rational(1)) / (d * d * d)};
}

}  // namespace

TEST_CASE("unit-model x=0 column matches the classical closed forms") {
    for (const Rational& u : {Rational(1, 2), Rational(-1), Rational(3)}) {
        FamilySpec spec{MomentModel::unit(), u, Rational(0), 1, 3};
        PolynomialFamily fam = pfe::build_family(spec);
        std::vector<Rational> expected = frobenius_euler_numbers(u);
        for (unsigned n = 0; n <= 3; ++n)
            CHECK(fam.poly(n).eval(Rational(0)) == expected[n]);
    }
}

TEST_CASE("u = 1/2 gives constants 1, -2, 6, -26") {
    FamilySpec spec{MomentModel::unit(), Rational(1, 2), Rational(0), 1, 3};
    PolynomialFamily fam = pfe::build_family(spec);
    std::vector<long> expected = {1, -2, 6, -26};
    for (unsigned n = 0; n <= 3; ++n)
        CHECK(fam.poly(n).eval(Rational(0)) == Rational(expected[n]));
}

TEST_CASE("u = -1 order 1 degree 1 is the first Euler polynomial x - 1/2") {
    FamilySpec spec{MomentModel::unit(), Rational(-1), Rational(0), 1, 1};
    PolynomialFamily fam = pfe::build_family(spec);
    CHECK(fam.poly(1) == XPolynomial({Rational(-1, 2), Rational(1)}));
}

TEST_CASE("u = 1 is rejected") {
    FamilySpec spec{MomentModel::unit(), Rational(1), Rational(0), 1, 3};
    CHECK_THROWS_AS(pfe::build_family(spec), std::domain_error);
}

TEST_CASE("order-0 family expands through second-kind numbers") {
    for (const auto& m : {MomentModel::exponential(Rational(3)),
                          MomentModel::poisson(Rational(2)), MomentModel::unit()}) {
        FamilySpec spec{m, Rational(1, 2), Rational(0), 0, 8};
        PolynomialFamily fam = pfe::build_family(spec);
        pfe::StirlingTable s2y = pfe::probabilistic_s2(m, 8);
        for (unsigned n = 0; n <= 8; ++n) {
            XPolynomial expected;
            for (unsigned k = 0; k <= n; ++k)
                expected += s2y.value(n, k) * XPolynomial::falling(k);
            CHECK(fam.poly(n) == expected);
            CHECK(fam.poly(n).eval(Rational(0)) == Rational(n == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("lambda = 0 spec equals the non-degenerate family") {
    FamilySpec degen{MomentModel::geometric(Rational(1, 2)), Rational(-1), Rational(0), 1, 6};
    FamilySpec plain = degen;
    PolynomialFamily a = pfe::build_family(degen);
    PolynomialFamily b = pfe::build_family(plain);
    for (unsigned n = 0; n <= 6; ++n) CHECK(a.poly(n) == b.poly(n));
}

TEST_CASE("degree and leading coefficient") {
    for (const auto& m : {MomentModel::bernoulli(Rational(1, 2)),
                          MomentModel::exponential(Rational(3))}) {
        for (const Rational& lambda : {Rational(0), Rational(1, 4)}) {
            FamilySpec spec{m, Rational(1, 2), lambda, 2, 8};
            PolynomialFamily fam = pfe::build_family(spec);
            for (unsigned n = 0; n <= 8; ++n) {
                CHECK(fam.poly(n).degree() == static_cast<int>(n));
                CHECK(fam.poly(n).coeff(n) == m.mean().pow(static_cast<long>(n)));
            }
        }
    }
}

TEST_CASE("boundary identity holds exactly") {
    FamilySpec spec{MomentModel::exponential(Rational(3)), Rational(1, 2), Rational(0), 1, 8};
    CHECK(pfe::family_boundary_check(pfe::build_family(spec)).all_ok());

    FamilySpec degen{MomentModel::poisson(Rational(2)), Rational(-1), Rational(1, 4), 1, 8};
    CHECK(pfe::family_boundary_check(pfe::build_family(degen)).all_ok());

    FamilySpec r2 = spec;
    r2.order_r = 2;
    CHECK_THROWS_AS(pfe::family_boundary_check(pfe::build_family(r2)),
                    std::invalid_argument);
}

TEST_CASE("order reduction identity holds exactly") {
    FamilySpec base{MomentModel::poisson(Rational(2)), Rational(-1), Rational(0), 2, 8};
    FamilySpec lower = base;
    lower.order_r = 1;
    CHECK(pfe::order_reduction_check(pfe::build_family(base), pfe::build_family(lower))
              .all_ok());

    // r = 1 vs r = 0 chains down to the boundary identity
    FamilySpec unit1{MomentModel::unit(), Rational(1, 2), Rational(0), 1, 8};
    FamilySpec unit0 = unit1;
    unit0.order_r = 0;
    CHECK(pfe::order_reduction_check(pfe::build_family(unit1), pfe::build_family(unit0))
              .all_ok());

    CHECK_THROWS_AS(pfe::order_reduction_check(pfe::build_family(unit1),
                                               pfe::build_family(unit1)),
                    std::invalid_argument);
}

TEST_CASE("unit-model Sheffer recurrence is the derivative") {
    FamilySpec spec{MomentModel::unit(), Rational(1, 2), Rational(0), 1, 8};
    PolynomialFamily fam = pfe::build_family(spec);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(fam.poly(n).derivative() ==
              Rational(static_cast<long>(n)) * fam.poly(n - 1));
    CHECK(pfe::sheffer_recurrence_check(fam).all_ok());
}

TEST_CASE("Sheffer recurrence for a degenerate exponential family") {
    FamilySpec spec{MomentModel::exponential(Rational(2)), Rational(1, 2), Rational(1, 4), 1, 8};
    CHECK(pfe::sheffer_recurrence_check(pfe::build_family(spec)).all_ok());
}

TEST_CASE("Sheffer pairing is n! on the diagonal and zero off it") {
    FamilySpec spec{MomentModel::exponential(Rational(3)), Rational(1, 2), Rational(0), 1, 6};
    PolynomialFamily fam = pfe::build_family(spec);
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 0; k <= 6; ++k)
            CHECK(pfe::sheffer_pairing(fam, n, k) ==
                  (n == k ? pfe::factorial(n) : Rational(0)));
}

TEST_CASE("pairing for an order-2 unit family") {
    FamilySpec spec{MomentModel::unit(), Rational(1, 2), Rational(0), 2, 4};
    PolynomialFamily fam = pfe::build_family(spec);
    CHECK(pfe::sheffer_pairing(fam, 3, 3) == Rational(6));
    CHECK(pfe::sheffer_pairing(fam, 4, 2) == Rational(0));
    CHECK(pfe::sheffer_pairing(fam, 0, 0) == Rational(1));
}
