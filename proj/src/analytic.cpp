#include "vcfb/analytic.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"

namespace vcfb {

namespace {

double checked(double d, double t) {
    if (!std::isfinite(d) || std::abs(d) <= kSingularTolerance) {
        throw SingularDenominator(fmt::format("soliton denominator {} at t={} is singular", d, t));
    }
    return d;
}

double kink(const SolitonSolutionSpec& s, double x, double background, double denominator, double phase) {
    const double L = s.amplitude;
    return background + L * std::tanh(s.w + L * x / (2.0 * denominator) - 0.5 * L * phase);
}

}  // namespace

double eval_reference(const SolitonSolutionSpec& spec, double x, double t, const QuadratureOptions& opt) {
    auto background = [&](double s) {
        double mi = spec.m_offset;
        if (!spec.m.is_zero()) mi += quadrature([&](double r) { return spec.m(r); }, 0.0, s, opt);
        return spec.q + mi;
    };
    auto denominator = [&](double s) {
        if (spec.b1.is_zero()) return spec.p;
        return spec.p + quadrature([&](double r) { return spec.b1(r) * background(r); }, 0.0, s, opt);
    };

    const double d = checked(denominator(t), t);
    double phase = spec.phase_offset;
    if (!spec.b2.is_zero()) {
        phase += quadrature(
            [&](double s) {
                const double ds = checked(denominator(s), s);
                return spec.b2(s) * background(s) / (ds * ds);
            },
            0.0, t, opt);
    }
    return kink(spec, x, background(t), d, phase);
}

SolitonReference::SolitonReference(SolitonSolutionSpec spec, double horizon, double spacing, QuadratureOptions opt)
    : spec_(std::move(spec)), integrals_(spec_.family(), horizon, spacing, opt) {
    if (!spec_.b2.is_zero()) {
        phase_ = std::make_unique<CumulativeIntegral>(
            [this](double s) {
                const double ds = checked(integrals_.denominator(s), s);
                return spec_.b2(s) * integrals_.background(s) / (ds * ds);
            },
            0.0, horizon, spacing, spec_.phase_offset, opt);
    }
}

double SolitonReference::phase_integral(double t) const {
    return phase_ ? (*phase_)(t) : spec_.phase_offset;
}

double SolitonReference::operator()(double x, double t) const {
    return kink(spec_, x, background(t), checked(denominator(t), t), phase_integral(t));
}

MacroField ProblemSetup::initial_field() const {
    MacroField u0;
    u0.t = 0.0;
    u0.u.resize(grid.nx);
    for (std::size_t i = 0; i < grid.nx; ++i) u0.u[i] = reference(grid.x(i), 0.0);
    return u0;
}

SpaceTimeField example_closed_form(int k) {
    switch (k) {
        case 1:
            return [](double x, double t) { return 10.0 + 4.0 * std::tanh(6.0 + 1.6 * t - 0.4 * x); };
        case 2:
            return [](double x, double t) {
                return 10.0 + 4.0 * std::tanh(6.0 + 1.6 * t + 4.0 / 15.0 * t * t * t - 0.4 * x);
            };
        case 3:
            return [](double x, double t) {
                return 10.0 - 0.5 * std::cos(5.0 + t) +
                       4.0 * std::tanh(6.0 + 1.6 * t - 0.4 * x - 0.08 * std::sin(5.0 + t));
            };
        case 4:
            return [](double x, double t) {
                const double phase = 1.6 * t + 4.0 / 15.0 * t * t * t - 0.04 * t * t * std::sin(5.0 + t) -
                                     0.08 * t * std::cos(5.0 + t);
                return 10.0 - 0.5 * std::cos(5.0 + t) + 4.0 * std::tanh(6.0 + phase - 0.4 * x);
            };
        default:
            throw UnknownExample(k);
    }
}

SolitonSolutionSpec example_solution(int k) {
    if (k < 1 || k > 4) throw UnknownExample(k);

    SolitonSolutionSpec s;
    s.w = 6.0;
    s.p = -5.0;
    s.q = 10.0;
    s.amplitude = 4.0;
    s.b1 = {};
    const bool varying_dispersion = k == 2 || k == 4;
    const bool forced = k == 3 || k == 4;
    if (varying_dispersion) {
        s.b2 = [](double t) { return -2.0 - t * t; };
    } else {
        s.b2 = TimeFunction::constant(-2.0);
    }
    if (forced) {
        s.m = [](double t) { return 0.5 * std::sin(t + 5.0); };
        // Antiderivatives taken without integration constants:
        // \int m = -cos(5+t)/2, and for k=3 the phase integrand
        // b2 (q+M)/p^2 integrates to -(2/25)(10 t - sin(5+t)/2).
        s.m_offset = -0.5 * std::cos(5.0);
        s.phase_offset = k == 3 ? std::sin(5.0) / 25.0 : 0.0;
    }
    return s;
}

ExamplePreset example_preset(int k, double dx, double dt, double horizon) {
    ExamplePreset preset;
    preset.index = k;
    preset.solution = example_solution(k);
    preset.closed_form = example_closed_form(k);

    ProblemSetup& setup = preset.setup;
    setup.grid = Grid1D::covering(0.0, 40.0, dx, dt);
    setup.coefficients = make_family_model(preset.solution.family(), horizon, dt);
    setup.reference = preset.closed_form;
    if (k == 1) {
        setup.boundary.left = [](double) { return 14.0; };
        setup.boundary.right = [](double) { return 6.0; };
    } else {
        const double x_hi = setup.grid.x_end();
        setup.boundary.left = [f = preset.closed_form](double t) { return f(0.0, t); };
        setup.boundary.right = [f = preset.closed_form, x_hi](double t) { return f(x_hi, t); };
    }
    return preset;
}

ProblemSetup soliton_setup(const SolitonSolutionSpec& spec,
                           double x_lo,
                           double x_hi,
                           double dx,
                           double dt,
                           double horizon) {
    ProblemSetup setup;
    setup.grid = Grid1D::covering(x_lo, x_hi, dx, dt);
    setup.coefficients = make_family_model(spec.family(), horizon, dt);
    auto ref = std::make_shared<const SolitonReference>(spec, horizon, dt);
    setup.reference = [ref](double x, double t) { return (*ref)(x, t); };
    const double right_x = setup.grid.x_end();
    setup.boundary.left = [ref, x_lo](double t) { return (*ref)(x_lo, t); };
    setup.boundary.right = [ref, right_x](double t) { return (*ref)(right_x, t); };
    return setup;
}

}  // namespace vcfb
