#pragma once

// D1Q3 lattice Boltzmann core for u_t + a u u_x + b u_xx = m.
//
// Velocities are ordered {0, +c, -c}. One step performs, at every node,
//   f_i* = f_i - (f_i - f_i^eq(u)) / tau + dt h_i(u) + dt m / 3
// and then streams f_1 one node right and f_2 one node left. Boundary nodes
// are repaired afterwards according to BoundarySpec.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace vcfb {

using Populations = std::array<double, 3>;

/// Uniform 1D grid plus the lattice time step.
struct Grid1D {
    double x0 = 0.0;
    std::size_t nx = 0;
    double dx = 0.0;
    double dt = 0.0;

    /// Throws ConfigInvalid when nx < 3 or dx, dt are not positive/finite.
    Grid1D(double x0, std::size_t nx, double dx, double dt);
    Grid1D() = default;

    /// Builds the grid covering [x_lo, x_hi] with spacing dx. The interval
    /// length must be an integer multiple of dx (to 1e-9 relative).
    static Grid1D covering(double x_lo, double x_hi, double dx, double dt);

    double c() const noexcept { return dx / dt; }
    double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * dx; }
    double x_end() const noexcept { return x(nx - 1); }
    std::vector<double> nodes() const;
};

/// Populations for c0 = 0, c1 = +c, c2 = -c at one time level.
struct DistributionState {
    std::array<std::vector<double>, 3> f;
    double t = 0.0;

    explicit DistributionState(std::size_t nx = 0, double t = 0.0);
    std::size_t size() const noexcept { return f[0].size(); }
    Populations at(std::size_t i) const noexcept { return {f[0][i], f[1][i], f[2][i]}; }
    void set(std::size_t i, const Populations& p) noexcept;
};

struct MacroField {
    std::vector<double> u;
    double t = 0.0;
};

enum class BoundaryScheme {
    equilibrium_reset,
    nonequilibrium_extrapolation,
    /// Wrap-around streaming. Only meant for symmetry tests; boundary
    /// values are ignored.
    periodic,
};

struct BoundarySpec {
    double left_value = 0.0;
    double right_value = 0.0;
    BoundaryScheme scheme = BoundaryScheme::nonequilibrium_extrapolation;
};

/// Per-node lattice parameters (see coefficients.hpp for how they are derived).
struct LatticeParams {
    double tau = 1.0;
    double eta = 1.0;
    double lambda = 0.0;
};

/// f^eq = ((1 - eta) u, eta u / 2, eta u / 2).
constexpr Populations equilibrium(double u, double eta) noexcept {
    const double side = 0.5 * eta * u;
    return {(1.0 - eta) * u, side, side};
}

/// h = (lambda u^2 / 3, lambda u^2 / 3, -2 lambda u^2 / 3).
constexpr Populations compensatory(double u, double lambda) noexcept {
    const double third = lambda * u * u / 3.0;
    return {third, third, -2.0 * third};
}

/// Zeroth, first and second velocity moments of a population triple.
constexpr double moment0(const Populations& p) noexcept { return p[0] + p[1] + p[2]; }
constexpr double moment1(const Populations& p, double c) noexcept { return c * p[1] - c * p[2]; }
constexpr double moment2(const Populations& p, double c) noexcept { return c * c * (p[1] + p[2]); }

MacroField macro_velocity(const DistributionState& state);

/// Equilibrium initialization; macro_velocity of the result reproduces u0.
DistributionState initialize(const MacroField& u0, double eta);

/// One collide-force-stream update into `out` (resized as needed). `params`
/// and `force` hold one entry per node. Throws TauOutOfRange,
/// LengthMismatch, or NonFiniteError (step index unset).
void step_into(const Grid1D& grid,
               const DistributionState& in,
               std::span<const LatticeParams> params,
               std::span<const double> force,
               const BoundarySpec& bc,
               DistributionState& out);

DistributionState step(const Grid1D& grid,
                       const DistributionState& state,
                       std::span<const LatticeParams> params,
                       std::span<const double> force,
                       const BoundarySpec& bc);

}  // namespace vcfb
