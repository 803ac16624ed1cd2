#include <doctest.h>

#include <cmath>
#include <vector>

#include "vcfb/diagnostics.hpp"
#include "vcfb/errors.hpp"

using namespace vcfb;

namespace {

MacroField field(std::vector<double> v) { return {std::move(v), 0.2}; }

}  // namespace

TEST_CASE("absolute error") {
    const auto a = field({1.0, -2.0, 3.5});
    const auto ae = absolute_error(a, a);
    for (double v : ae) CHECK(v == 0.0);

    // Published rows: the AE column was computed before the values were
    // rounded to print, so it agrees with the printed digits to within half a
    // unit of each.
    const auto row4 = absolute_error(field({13.999370}), field({13.999367}));
    CHECK(row4[0] == doctest::Approx(3.0e-6).epsilon(1e-9));
    CHECK(std::abs(row4[0] - 3.0860e-6) <= 1e-6);
    const auto row16 = absolute_error(field({9.678672}), field({9.6891613}));
    CHECK(row16[0] == doctest::Approx(1.04893e-2).epsilon(1e-9));
    CHECK(std::abs(row16[0] - 1.0489e-2) <= 1e-6);

    CHECK_THROWS_AS(absolute_error(field({1.0}), field({1.0, 2.0})), LengthMismatch);
}

TEST_CASE("absolute error scales and is translation-sensitive") {
    const auto num = field({1.0, 4.0, -2.0});
    const auto ref = field({1.5, 3.0, -2.5});
    const auto base = absolute_error(num, ref);
    for (double k : {-3.0, 0.5, 7.0}) {
        MacroField kn = num;
        MacroField kr = ref;
        for (double& v : kn.u) v *= k;
        for (double& v : kr.u) v *= k;
        const auto scaled = absolute_error(kn, kr);
        for (std::size_t i = 0; i < base.size(); ++i) CHECK(scaled[i] == doctest::Approx(std::abs(k) * base[i]));
    }
    MacroField shifted = num;
    shifted.u[1] += 0.25;
    CHECK(absolute_error(shifted, ref)[1] != base[1]);
}

TEST_CASE("global relative error") {
    const auto ref = field(std::vector<double>(37, 10.0));
    CHECK(global_relative_error(ref, ref) == 0.0);
    for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{4001}}) {
        const auto r = field(std::vector<double>(n, 10.0));
        const auto u = field(std::vector<double>(n, 10.01));
        CHECK(global_relative_error(u, r) == doctest::Approx(1e-3).epsilon(1e-9));
    }
    CHECK_THROWS_AS(global_relative_error(field({1.0, 1.0}), field({0.0, 0.0})), ZeroReferenceNorm);
    CHECK_THROWS_AS(global_relative_error(field({1.0}), field({1.0, 2.0})), LengthMismatch);
}

TEST_CASE("GRE is scale invariant, not shift invariant, and not symmetric") {
    const auto num = field({10.2, 13.9, 6.1, 6.0});
    const auto ref = field({10.0, 14.0, 6.0, 6.0});
    const double base = global_relative_error(num, ref);
    for (double k : {-2.0, 0.1, 3.0}) {
        MacroField kn = num;
        MacroField kr = ref;
        for (double& v : kn.u) v *= k;
        for (double& v : kr.u) v *= k;
        CHECK(global_relative_error(kn, kr) == doctest::Approx(base).epsilon(1e-14));
    }
    MacroField sn = num;
    MacroField sr = ref;
    for (double& v : sn.u) v += 5.0;
    for (double& v : sr.u) v += 5.0;
    CHECK(global_relative_error(sn, sr) != doctest::Approx(base));

    // Same numerator, denominators 36 and 36.2.
    CHECK(global_relative_error(num, ref) == doctest::Approx(0.4 / 36.0));
    CHECK(global_relative_error(ref, num) == doctest::Approx(0.4 / 36.2));
    CHECK(global_relative_error(num, ref) != global_relative_error(ref, num));
}

TEST_CASE("max-norm difference") {
    CHECK(max_norm_difference(field({1.0, 2.0, 3.0}), field({1.5, 1.0, 3.0})) == 1.0);
    CHECK_THROWS_AS(max_norm_difference(field({1.0}), field({})), LengthMismatch);
}

TEST_CASE("convergence order") {
    const double h = 0.01;
    const std::vector<double> s2{2 * h, h};
    CHECK(convergence_order(std::vector<double>{4e-4, 1e-4}, s2) == doctest::Approx(2.0));
    CHECK(convergence_order(std::vector<double>{1e-3, 5e-4}, s2) == doctest::Approx(1.0));
    const std::vector<double> s3{4 * h, 2 * h, h};
    CHECK(convergence_order(std::vector<double>{8e-3, 1e-3, 1.25e-4}, s3) == doctest::Approx(3.0));

    CHECK_THROWS_AS(convergence_order(std::vector<double>{1e-3}, std::vector<double>{h}), DegenerateFit);
    CHECK_THROWS_AS(convergence_order(std::vector<double>{1e-3, 1e-4}, std::vector<double>{h, 2 * h}), DegenerateFit);
    CHECK_THROWS_AS(convergence_order(std::vector<double>{1e-3, 0.0}, s2), DegenerateFit);
    CHECK_THROWS_AS(convergence_order(std::vector<double>{1e-3, 1e-4}, s3), DegenerateFit);
}

TEST_CASE("error report samples the nearest nodes") {
    const Grid1D g(0.0, 4001, 0.01, 1e-4);
    MacroField ref{std::vector<double>(g.nx), 0.2};
    MacroField num = ref;
    for (std::size_t i = 0; i < g.nx; ++i) {
        ref.u[i] = 10.0 + 4.0 * std::tanh(6.0 - 0.4 * g.x(i));
        num.u[i] = ref.u[i] + 1e-3 * std::sin(g.x(i));
    }
    const auto positions = default_ae_positions();
    REQUIRE(positions.size() == 9);
    CHECK(positions.front() == 4.0);
    CHECK(positions.back() == 36.0);

    const auto report = make_error_report(g, num, ref, positions, 2.5, 2.5);
    CHECK(report.t == 0.2);
    CHECK(report.gre == doctest::Approx(global_relative_error(num, ref)));
    REQUIRE(report.ae_samples.size() == 9);
    for (std::size_t k = 0; k < 9; ++k) {
        const auto& s = report.ae_samples[k];
        CHECK(s.x == doctest::Approx(positions[k]));
        CHECK(s.ae == doctest::Approx(1e-3 * std::abs(std::sin(s.x))).epsilon(1e-9));
        CHECK(s.ae >= 0.0);
    }
    const std::vector<double> outside{-1.0, 50.0};
    CHECK(make_error_report(g, num, ref, outside, 1.0, 1.0).ae_samples.empty());
}
