#include "vcfb/coefficients.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"

namespace vcfb {

namespace {

double checked_denominator(double d, double t) {
    if (!std::isfinite(d) || std::abs(d) <= kSingularTolerance) {
        throw SingularDenominator(fmt::format("coefficient denominator {} at t={} is singular", d, t));
    }
    return d;
}

}  // namespace

CoefficientTriple eval_family_coefficients(const SolitonFamily& family, double x, double t, const QuadratureOptions& opt) {
    double d = family.p;
    if (!family.b1.is_zero()) {
        auto background = [&](double s) {
            double mi = family.m_offset;
            if (!family.m.is_zero()) mi += quadrature([&](double r) { return family.m(r); }, 0.0, s, opt);
            return family.q + mi;
        };
        d += quadrature([&](double s) { return family.b1(s) * background(s); }, 0.0, t, opt);
    }
    checked_denominator(d, t);

    const double b = x * family.b1(t) + family.b2(t);
    return {b / d, b, family.m(t)};
}

FamilyIntegrals::FamilyIntegrals(SolitonFamily family, double horizon, double spacing, QuadratureOptions opt)
    : family_(std::move(family)) {
    if (!family_.m.is_zero()) {
        m_integral_ = std::make_unique<CumulativeIntegral>(
            [m = family_.m](double s) { return m(s); }, 0.0, horizon, spacing, family_.m_offset, opt);
    }
    if (!family_.b1.is_zero()) {
        b1_integral_ = std::make_unique<CumulativeIntegral>(
            [this](double s) { return family_.b1(s) * background(s); }, 0.0, horizon, spacing, 0.0, opt);
    }
}

double FamilyIntegrals::background(double t) const {
    return family_.q + (m_integral_ ? (*m_integral_)(t) : family_.m_offset);
}

double FamilyIntegrals::denominator(double t) const {
    return family_.p + (b1_integral_ ? (*b1_integral_)(t) : 0.0);
}

CoefficientModel make_family_model(const SolitonFamily& family,
                                   double horizon,
                                   double spacing,
                                   const QuadratureOptions& opt) {
    auto tables = std::make_shared<const FamilyIntegrals>(family, horizon, spacing, opt);
    CoefficientModel model;
    model.provenance = CoefficientProvenance::soliton_family;
    model.b = [tables](double x, double t) {
        const auto& f = tables->family();
        return x * f.b1(t) + f.b2(t);
    };
    model.a = [tables](double x, double t) {
        const auto& f = tables->family();
        const double d = checked_denominator(tables->denominator(t), t);
        return (x * f.b1(t) + f.b2(t)) / d;
    };
    model.m = [tables](double, double t) { return tables->family().m(t); };
    return model;
}

LatticeParams solve_params(double a, double b, double c, double dt, double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw ConfigInvalid(fmt::format("eta must lie in (0, 1], got {}", eta));
    }
    const double diffusive_scale = dt * c * c * eta;
    const double tau = 0.5 - b / diffusive_scale;
    if (!(tau > 0.5)) throw TauOutOfRange(tau);
    const double advective_scale = 2.0 * tau * dt * c;
    return {tau, eta, a / advective_scale};
}

// Same factor grouping as solve_params so that the round trip only loses
// the rounding of tau itself.
CoefficientTriple implied_coefficients(const LatticeParams& lp, double c, double dt) {
    const double diffusive_scale = dt * c * c * lp.eta;
    const double advective_scale = 2.0 * lp.tau * dt * c;
    return {advective_scale * lp.lambda, (0.5 - lp.tau) * diffusive_scale, 0.0};
}

}  // namespace vcfb
