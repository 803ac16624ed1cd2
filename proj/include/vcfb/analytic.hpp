#pragma once

// Single-kink reference solutions of the forced variable-coefficient Burgers
// equation and the four ready-made experiments built on them.
//
// For the coefficient family in coefficients.hpp the solution is
//   u = q + M(t) + L tanh( w + L x / (2 D(t)) - (L/2) Phi(t) ),
//   M(t)   = m_offset     + \int_0^t m,
//   D(t)   = p            + \int_0^t b1 (q + M),
//   Phi(t) = phase_offset + \int_0^t b2 (q + M) / D^2.
// The offsets are the values of the antiderivatives at t = 0, so symbolic
// (constant-free) antiderivatives can be reproduced exactly.

#include <functional>
#include <memory>
#include <optional>

#include "vcfb/coefficients.hpp"
#include "vcfb/lattice.hpp"
#include "vcfb/quadrature.hpp"

namespace vcfb {

struct SolitonSolutionSpec {
    double w = 0.0;
    double p = 0.0;
    double q = 0.0;
    double amplitude = 0.0;
    TimeFunction b1;
    TimeFunction b2;
    TimeFunction m;
    double m_offset = 0.0;
    double phase_offset = 0.0;

    SolitonFamily family() const { return {b1, b2, m, p, q, m_offset}; }
};

/// Direct evaluation, every integral by adaptive quadrature (nested where
/// needed). Slow but independent of any table. Throws SingularDenominator.
double eval_reference(const SolitonSolutionSpec& spec, double x, double t, const QuadratureOptions& opt = {});

/// Same solution with the time integrals tabulated on [0, horizon].
class SolitonReference {
public:
    SolitonReference(SolitonSolutionSpec spec, double horizon, double spacing, QuadratureOptions opt = {});
    SolitonReference(const SolitonReference&) = delete;
    SolitonReference& operator=(const SolitonReference&) = delete;

    double operator()(double x, double t) const;

    double background(double t) const { return integrals_.background(t); }
    double denominator(double t) const { return integrals_.denominator(t); }
    double phase_integral(double t) const;

    const SolitonSolutionSpec& spec() const noexcept { return spec_; }

private:
    SolitonSolutionSpec spec_;
    FamilyIntegrals integrals_;
    std::unique_ptr<CumulativeIntegral> phase_;
};

using SpaceTimeField = std::function<double(double x, double t)>;

/// Boundary values as a function of time.
struct BoundaryProgram {
    std::function<double(double t)> left;
    std::function<double(double t)> right;

    BoundarySpec at(double t, BoundaryScheme scheme) const { return {left(t), right(t), scheme}; }
};

/// Everything a solver run needs: grid, coefficients, initial data, boundary
/// program and the exact solution used for error reporting.
struct ProblemSetup {
    Grid1D grid;
    CoefficientModel coefficients;
    SpaceTimeField reference;
    BoundaryProgram boundary;

    MacroField initial_field() const;
};

struct ExamplePreset {
    int index = 0;
    SolitonSolutionSpec solution;
    /// Hand-derived closed form of the reference solution.
    SpaceTimeField closed_form;
    ProblemSetup setup;
};

/// Closed forms of the four experiments (k = 1..4). Throws UnknownExample.
SpaceTimeField example_closed_form(int k);

/// Reference-solution parameters of experiment k. Throws UnknownExample.
SolitonSolutionSpec example_solution(int k);

/// Fully wired experiment k on [0, 40]. Example 1 uses the constant boundary
/// values 14 and 6; the others sample the closed form at the endpoints.
/// `horizon` bounds the tabulated integrals (evaluation beyond it still works).
ExamplePreset example_preset(int k, double dx = 0.01, double dt = 1e-4, double horizon = 2.0);

/// Builds a setup for an arbitrary soliton spec on [x_lo, x_hi]. Reference,
/// initial data and boundary values come from a tabulated SolitonReference.
ProblemSetup soliton_setup(const SolitonSolutionSpec& spec,
                           double x_lo,
                           double x_hi,
                           double dx,
                           double dt,
                           double horizon);

}  // namespace vcfb
