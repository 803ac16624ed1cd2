#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "vcfb/analytic.hpp"
#include "vcfb/errors.hpp"

using namespace vcfb;

namespace {

constexpr std::array<double, 9> kSampleX{4.0, 8.0, 12.0, 16.0, 20.0, 24.0, 28.0, 32.0, 36.0};

// Published theoretical values at t = 0.2.
constexpr std::array<double, 9> kExample2Theory{13.999367, 13.984498, 13.636275, 9.6891613, 6.2696634,
                                                6.0113594, 6.0004637, 6.0000189, 6.0000008};
constexpr std::array<double, 9> kExample3Theory{13.76519,  13.752222, 13.446754, 9.7284481, 6.0735016,
                                                5.7787673, 5.7662734, 5.7657633, 5.7657425};

}  // namespace

TEST_CASE("published theoretical columns at t = 0.2") {
    const auto s2 = example_solution(2);
    const auto s3 = example_solution(3);
    const auto p2 = example_preset(2);
    const auto p3 = example_preset(3);
    for (std::size_t i = 0; i < kSampleX.size(); ++i) {
        const double x = kSampleX[i];
        INFO("x = " << x);
        CHECK(std::abs(eval_reference(s2, x, 0.2) - kExample2Theory[i]) <= 5e-7);
        CHECK(std::abs(eval_reference(s3, x, 0.2) - kExample3Theory[i]) <= 5e-7);
        CHECK(std::abs(p2.setup.reference(x, 0.2) - kExample2Theory[i]) <= 5e-7);
        CHECK(std::abs(p3.setup.reference(x, 0.2) - kExample3Theory[i]) <= 5e-7);
    }
}

TEST_CASE("soliton centre of example 1") {
    const auto s1 = example_solution(1);
    for (double t : {0.0, 0.2, 1.0, 1.8}) {
        const double x = (6.0 + 1.6 * t) / 0.4;
        CHECK(eval_reference(s1, x, t) == doctest::Approx(10.0).epsilon(1e-14));
    }
}

TEST_CASE("example 3 initial profile") {
    const auto s3 = example_solution(3);
    for (double x : {0.0, 5.0, 15.0, 30.0}) {
        const double expected = 10.0 - 0.5 * std::cos(5.0) + 4.0 * std::tanh(6.0 - 0.4 * x - 0.08 * std::sin(5.0));
        CHECK(std::abs(eval_reference(s3, x, 0.0) - expected) <= 1e-12);
    }
}

TEST_CASE("closed forms agree with the quadrature evaluation") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xd(0.0, 40.0);
    std::uniform_real_distribution<double> td(0.0, 1.8);
    for (int k = 1; k <= 4; ++k) {
        const auto spec = example_solution(k);
        const auto closed = example_closed_form(k);
        const auto preset = example_preset(k);
        double worst = 0.0;
        double worst_table = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const double x = xd(rng);
            const double t = td(rng);
            const double c = closed(x, t);
            worst = std::max(worst, std::abs(eval_reference(spec, x, t) - c));
            worst_table = std::max(worst_table, std::abs(preset.setup.reference(x, t) - c));
        }
        INFO("example " << k);
        CHECK(worst <= 1e-9);
        CHECK(worst_table <= 1e-9);
    }
}

TEST_CASE("plateaus sit at background +- amplitude") {
    for (int k = 1; k <= 4; ++k) {
        const auto spec = example_solution(k);
        const SolitonReference ref(spec, 2.0, 1e-3);
        for (double t : {0.2, 1.0, 1.8}) {
            const double bg = ref.background(t);
            const double d = ref.denominator(t);
            const double arg_left = spec.w - 0.5 * spec.amplitude * ref.phase_integral(t);
            const double arg_right = arg_left + spec.amplitude * 40.0 / (2.0 * d);
            const double left = ref(0.0, t);
            const double right = ref(40.0, t);
            // 1 - tanh(z) <= 2 exp(-2 z) for z > 0; a little slack covers round-off.
            const double sat_left = 2.0 * spec.amplitude * std::exp(-2.0 * std::abs(arg_left)) * (1.0 + 1e-9) + 1e-13;
            const double sat_right = 2.0 * spec.amplitude * std::exp(-2.0 * std::abs(arg_right)) * (1.0 + 1e-9) + 1e-13;
            CHECK(std::abs(left - (bg + spec.amplitude)) <= sat_left);
            CHECK(std::abs(right - (bg - spec.amplitude)) <= sat_right);
            CHECK(std::abs((left - right) - 2.0 * spec.amplitude) <= sat_left + sat_right);
        }
    }
}

TEST_CASE("reference solutions satisfy the PDE") {
    const double h = 1e-4;
    for (int k = 1; k <= 4; ++k) {
        const auto preset = example_preset(k);
        const auto spec = preset.solution;
        const auto& model = preset.setup.coefficients;
        const auto u = [&](double x, double t) { return eval_reference(spec, x, t); };
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = 1.0 + 38.0 * i / 49.0;
            for (int j = 0; j < 50; ++j) {
                const double t = 0.01 + 1.78 * j / 49.0;
                const double u0 = u(x, t);
                const double ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
                const double up = u(x + h, t);
                const double um = u(x - h, t);
                const double ux = (up - um) / (2.0 * h);
                const double uxx = (up - 2.0 * u0 + um) / (h * h);
                const double r = ut + model.a(x, t) * u0 * ux + model.b(x, t) * uxx - model.m(x, t);
                worst = std::max(worst, std::abs(r));
            }
        }
        INFO("example " << k);
        CHECK(worst <= 1e-4);
    }
}

TEST_CASE("example presets") {
    const auto p1 = example_preset(1);
    CHECK(p1.setup.grid.nx == 4001);
    CHECK(p1.setup.grid.x_end() == doctest::Approx(40.0));
    const auto bc = p1.setup.boundary.at(0.7, BoundaryScheme::equilibrium_reset);
    CHECK(bc.left_value == 14.0);
    CHECK(bc.right_value == 6.0);
    CHECK(p1.setup.coefficients.a(3.0, 0.4) == doctest::Approx(0.4));
    CHECK(p1.setup.coefficients.b(3.0, 0.4) == -2.0);
    CHECK(p1.setup.coefficients.m(3.0, 0.4) == 0.0);
    const auto ic = p1.setup.initial_field();
    for (std::size_t i = 0; i < ic.u.size(); i += 97) {
        CHECK(ic.u[i] == doctest::Approx(10.0 + 4.0 * std::tanh(6.0 - 0.4 * p1.setup.grid.x(i))).epsilon(1e-14));
    }

    const auto p4 = example_preset(4);
    const auto bc4 = p4.setup.boundary.at(1.3, BoundaryScheme::nonequilibrium_extrapolation);
    CHECK(std::abs(bc4.left_value - p4.closed_form(0.0, 1.3)) <= 1e-9);
    CHECK(std::abs(bc4.right_value - p4.closed_form(40.0, 1.3)) <= 1e-9);

    CHECK_THROWS_AS(example_preset(0), UnknownExample);
    CHECK_THROWS_AS(example_solution(5), UnknownExample);
    CHECK_THROWS_AS(example_closed_form(-1), UnknownExample);
}

TEST_CASE("singular denominator in a user spec") {
    SolitonSolutionSpec s;
    s.w = 1.0;
    s.p = 0.0;
    s.q = 1.0;
    s.amplitude = 1.0;
    s.b2 = TimeFunction::constant(-1.0);
    CHECK_THROWS_AS(eval_reference(s, 1.0, 0.1), SingularDenominator);
}
