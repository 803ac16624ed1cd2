#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "vcfb/coefficients.hpp"
#include "vcfb/errors.hpp"

using namespace vcfb;
using vcfb::testing::within_ulps;

namespace {

SolitonFamily example1_family() { return {{}, TimeFunction::constant(-2.0), {}, -5.0, 10.0, 0.0}; }

}  // namespace

TEST_CASE("coefficient family at hand-checked points") {
    SUBCASE("constant b2") {
        for (double x : {0.0, 7.3, 40.0}) {
            for (double t : {0.0, 0.9, 1.8}) {
                const auto c = eval_family_coefficients(example1_family(), x, t);
                CHECK(c.a == doctest::Approx(0.4).epsilon(1e-15));
                CHECK(c.b == -2.0);
                CHECK(c.m == 0.0);
            }
        }
    }
    SUBCASE("b2 = -2 - t^2 at t = 1") {
        SolitonFamily f = example1_family();
        f.b2 = [](double t) { return -2.0 - t * t; };
        const auto c = eval_family_coefficients(f, 12.0, 1.0);
        CHECK(c.b == doctest::Approx(-3.0).epsilon(1e-15));
        CHECK(c.a == doctest::Approx(0.6).epsilon(1e-15));
    }
    SUBCASE("forcing does not touch a when b1 vanishes") {
        SolitonFamily f = example1_family();
        f.m = [](double t) { return 0.5 * std::sin(t + 5.0); };
        const auto c = eval_family_coefficients(f, 3.0, 1.3);
        CHECK(c.a == doctest::Approx(0.4).epsilon(1e-15));
        CHECK(c.m == doctest::Approx(0.5 * std::sin(6.3)).epsilon(1e-15));
    }
    SUBCASE("nonzero b1 through the nested integral") {
        // b1 = 1, m = 1, q = 2, p = 3: M = t, D = 3 + 2t + t^2/2.
        SolitonFamily f{TimeFunction::constant(1.0), TimeFunction::constant(-1.0), TimeFunction::constant(1.0),
                        3.0, 2.0, 0.0};
        const double t = 0.8;
        const double x = 5.0;
        const double d = 3.0 + 2.0 * t + 0.5 * t * t;
        const auto c = eval_family_coefficients(f, x, t);
        CHECK(std::abs(c.a - (x - 1.0) / d) <= 1e-10);
        CHECK(c.b == doctest::Approx(x - 1.0));

        const auto model = make_family_model(f, 2.0, 1e-3);
        CHECK(std::abs(model.a(x, t) - c.a) <= 1e-10);
        CHECK(model.provenance == CoefficientProvenance::soliton_family);
        const FamilyIntegrals tables(f, 2.0, 1e-3);
        CHECK(std::abs(tables.background(t) - (2.0 + t)) <= 1e-10);
        CHECK(std::abs(tables.denominator(t) - d) <= 1e-10);
    }
}

TEST_CASE("vanishing denominator is rejected") {
    SolitonFamily f = example1_family();
    f.p = 0.0;
    CHECK_THROWS_AS(eval_family_coefficients(f, 1.0, 0.5), SingularDenominator);
    const auto model = make_family_model(f, 1.0, 1e-2);
    CHECK_THROWS_AS(model.a(1.0, 0.5), SingularDenominator);
}

TEST_CASE("solve_params on the worked examples") {
    const auto lp = solve_params(0.4, -2.0, 100.0, 1e-4, 1.0);
    CHECK(lp.tau == 2.5);
    CHECK(lp.eta == 1.0);
    CHECK(lp.lambda == doctest::Approx(8.0).epsilon(1e-15));

    const auto linear = solve_params(0.0, -2.0, 100.0, 1e-4, 1.0);
    CHECK(linear.tau == 2.5);
    CHECK(linear.lambda == 0.0);

    const auto varying = solve_params(0.4, -3.0, 100.0, 1e-4, 1.0);
    CHECK(varying.tau == doctest::Approx(3.5).epsilon(1e-15));
    const auto back = implied_coefficients(varying, 100.0, 1e-4);
    CHECK(within_ulps(back.a, 0.4, 4));
    CHECK(within_ulps(back.b, -3.0, 4));
}

TEST_CASE("solve_params round trip over random valid inputs") {
    // Valid inputs are drawn so that tau >= 1; see README for the domain.
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> a_dist(-20.0, 20.0);
    std::uniform_real_distribution<double> log_c(std::log(0.1), std::log(1e4));
    std::uniform_real_distribution<double> log_dt(std::log(1e-7), std::log(1e-1));
    std::uniform_real_distribution<double> excess(0.5, 50.0);

    int checked = 0;
    while (checked < 10000) {
        const double c = std::exp(log_c(rng));
        const double dt = std::exp(log_dt(rng));
        const double eta = 0.05 + 0.95 * unit(rng);
        const double a = a_dist(rng);
        const double b = -excess(rng) * dt * c * c * eta;
        const auto lp = solve_params(a, b, c, dt, eta);
        REQUIRE(lp.tau > 0.5);
        const auto back = implied_coefficients(lp, c, dt);
        INFO("a=" << a << " b=" << b << " c=" << c << " dt=" << dt << " eta=" << eta);
        REQUIRE(within_ulps(back.a, a, 4));
        REQUIRE(within_ulps(back.b, b, 4));
        ++checked;
    }
}

TEST_CASE("tau decreases strictly in b") {
    double previous = solve_params(0.4, -10.0, 100.0, 1e-4, 0.7).tau;
    for (double b = -9.5; b < 0.0; b += 0.5) {
        const double tau = solve_params(0.4, b, 100.0, 1e-4, 0.7).tau;
        CHECK(tau < previous);
        previous = tau;
    }
}

TEST_CASE("solve_params rejects unrepresentable inputs") {
    CHECK_THROWS_AS(solve_params(0.4, 0.0, 100.0, 1e-4, 1.0), TauOutOfRange);
    CHECK_THROWS_AS(solve_params(0.4, 2.0, 100.0, 1e-4, 1.0), TauOutOfRange);
    CHECK_THROWS_AS(solve_params(0.4, -2.0, 100.0, 1e-4, 0.0), ConfigInvalid);
    CHECK_THROWS_AS(solve_params(0.4, -2.0, 100.0, 1e-4, 1.5), ConfigInvalid);
}
