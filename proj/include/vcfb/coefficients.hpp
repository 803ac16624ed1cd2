#pragma once

// PDE coefficients a(x,t), b(x,t), m(x,t) and their translation into the
// lattice parameters (tau, eta, lambda). The lattice recovers
//   u_t + 2 tau dt c lambda u u_x + (1/2 - tau) dt c^2 eta u_xx = m,
// so a given (a, b) pair fixes tau and lambda once eta is chosen.

#include <functional>
#include <memory>

#include "vcfb/lattice.hpp"
#include "vcfb/quadrature.hpp"

namespace vcfb {

using SpaceTimeFunction = std::function<double(double x, double t)>;

enum class CoefficientProvenance { soliton_family, custom };

struct CoefficientModel {
    SpaceTimeFunction a;
    SpaceTimeFunction b;
    SpaceTimeFunction m;
    CoefficientProvenance provenance = CoefficientProvenance::custom;
};

struct CoefficientTriple {
    double a = 0.0;
    double b = 0.0;
    double m = 0.0;
};

/// Denominators closer to zero than this are rejected.
inline constexpr double kSingularTolerance = 1e-12;

/// Inputs of the soliton-supporting coefficient family
///   a = (x b1 + b2) / D(t),  b = x b1 + b2,  m = m(t),
///   D(t) = p + \int_0^t b1(s) [q + M(s)] ds,  M(s) = m_offset + \int_0^s m.
struct SolitonFamily {
    TimeFunction b1;
    TimeFunction b2;
    TimeFunction m;
    double p = 0.0;
    double q = 0.0;
    /// Value of the m antiderivative at t = 0.
    double m_offset = 0.0;
};

/// Direct evaluation of the family at one point; every integral goes through
/// adaptive quadrature. Throws SingularDenominator.
CoefficientTriple eval_family_coefficients(const SolitonFamily& family, double x, double t, const QuadratureOptions& opt = {});

/// Time integrals of a SolitonFamily, tabulated on [0, horizon] with the
/// given spacing. Immutable after construction; safe to share across threads.
class FamilyIntegrals {
public:
    FamilyIntegrals(SolitonFamily family, double horizon, double spacing, QuadratureOptions opt = {});
    FamilyIntegrals(const FamilyIntegrals&) = delete;
    FamilyIntegrals& operator=(const FamilyIntegrals&) = delete;

    const SolitonFamily& family() const noexcept { return family_; }
    /// q + M(t).
    double background(double t) const;
    /// D(t); not checked for singularity.
    double denominator(double t) const;

private:
    SolitonFamily family_;
    std::unique_ptr<CumulativeIntegral> m_integral_;
    std::unique_ptr<CumulativeIntegral> b1_integral_;
};

/// Builds a CoefficientModel backed by tabulated integrals. `a` throws
/// SingularDenominator where D(t) vanishes.
CoefficientModel make_family_model(const SolitonFamily& family,
                                   double horizon,
                                   double spacing,
                                   const QuadratureOptions& opt = {});

/// Inverts the matching relations for fixed eta:
///   tau = 1/2 - b / (dt c^2 eta),  lambda = a / (2 tau dt c).
/// Throws TauOutOfRange when b / eta >= 0, ConfigInvalid for eta outside (0, 1].
LatticeParams solve_params(double a, double b, double c, double dt, double eta);

/// Forward relations, (a, b) implied by lattice parameters.
CoefficientTriple implied_coefficients(const LatticeParams& lp, double c, double dt);

}  // namespace vcfb
