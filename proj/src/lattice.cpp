#include "vcfb/lattice.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"

namespace vcfb {

Grid1D::Grid1D(double x0_, std::size_t nx_, double dx_, double dt_)
    : x0(x0_), nx(nx_), dx(dx_), dt(dt_) {
    if (nx < 3) {
        throw ConfigInvalid(fmt::format("grid needs at least 3 nodes, got {}", nx));
    }
    if (!(dx > 0.0) || !std::isfinite(dx) || !(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigInvalid(fmt::format("grid spacing and time step must be positive (dx={}, dt={})", dx, dt));
    }
    if (!std::isfinite(x0) || !std::isfinite(dx / dt)) {
        throw ConfigInvalid("lattice speed dx/dt is not finite");
    }
}

Grid1D Grid1D::covering(double x_lo, double x_hi, double dx, double dt) {
    if (!(x_hi > x_lo)) {
        throw ConfigInvalid(fmt::format("empty domain [{}, {}]", x_lo, x_hi));
    }
    if (!(dx > 0.0)) {
        throw ConfigInvalid(fmt::format("dx must be positive, got {}", dx));
    }
    const double cells = (x_hi - x_lo) / dx;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
        throw ConfigInvalid(fmt::format("domain length {} is not a multiple of dx={}", x_hi - x_lo, dx));
    }
    return Grid1D(x_lo, static_cast<std::size_t>(rounded) + 1, dx, dt);
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> xs(nx);
    for (std::size_t i = 0; i < nx; ++i) xs[i] = x(i);
    return xs;
}

DistributionState::DistributionState(std::size_t nx, double t_) : t(t_) {
    for (auto& fi : f) fi.assign(nx, 0.0);
}

void DistributionState::set(std::size_t i, const Populations& p) noexcept {
    f[0][i] = p[0];
    f[1][i] = p[1];
    f[2][i] = p[2];
}

MacroField macro_velocity(const DistributionState& state) {
    MacroField out;
    out.t = state.t;
    out.u.resize(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        out.u[i] = state.f[0][i] + state.f[1][i] + state.f[2][i];
    }
    return out;
}

DistributionState initialize(const MacroField& u0, double eta) {
    DistributionState state(u0.u.size(), u0.t);
    for (std::size_t i = 0; i < u0.u.size(); ++i) {
        state.set(i, equilibrium(u0.u[i], eta));
    }
    return state;
}

namespace {

// Rebuilds a boundary node from its target velocity. For extrapolation the
// nonequilibrium part of the adjacent interior node is carried over.
Populations boundary_populations(double value,
                                 double eta,
                                 const DistributionState& s,
                                 std::size_t neighbour,
                                 BoundaryScheme scheme) {
    Populations p = equilibrium(value, eta);
    if (scheme == BoundaryScheme::nonequilibrium_extrapolation) {
        const Populations nb = s.at(neighbour);
        const Populations nb_eq = equilibrium(moment0(nb), eta);
        for (std::size_t k = 0; k < 3; ++k) p[k] += nb[k] - nb_eq[k];
    }
    return p;
}

}  // namespace

void step_into(const Grid1D& grid,
               const DistributionState& in,
               std::span<const LatticeParams> params,
               std::span<const double> force,
               const BoundarySpec& bc,
               DistributionState& out) {
    const std::size_t n = in.size();
    if (n != grid.nx) throw LengthMismatch(n, grid.nx);
    if (params.size() != n) throw LengthMismatch(params.size(), n);
    if (force.size() != n) throw LengthMismatch(force.size(), n);

    const double dt = grid.dt;
    for (auto& fi : out.f) fi.resize(n);
    out.t = in.t + dt;

    const bool periodic = bc.scheme == BoundaryScheme::periodic;
    const double* f0 = in.f[0].data();
    const double* f1 = in.f[1].data();
    const double* f2 = in.f[2].data();
    double* g0 = out.f[0].data();
    double* g1 = out.f[1].data();
    double* g2 = out.f[2].data();

    for (std::size_t i = 0; i < n; ++i) {
        const LatticeParams& lp = params[i];
        if (!(lp.tau > 0.5)) throw TauOutOfRange(lp.tau);

        const double u = f0[i] + f1[i] + f2[i];
        const Populations eq = equilibrium(u, lp.eta);
        const Populations h = compensatory(u, lp.lambda);
        const double omega = 1.0 / lp.tau;
        const double src = dt * force[i] / 3.0;

        const double p0 = f0[i] - omega * (f0[i] - eq[0]) + dt * h[0] + src;
        const double p1 = f1[i] - omega * (f1[i] - eq[1]) + dt * h[1] + src;
        const double p2 = f2[i] - omega * (f2[i] - eq[2]) + dt * h[2] + src;

        g0[i] = p0;
        if (i + 1 < n) {
            g1[i + 1] = p1;
        } else if (periodic) {
            g1[0] = p1;
        }
        if (i > 0) {
            g2[i - 1] = p2;
        } else if (periodic) {
            g2[n - 1] = p2;
        }
    }

    if (!periodic) {
        // The incoming populations g1[0] and g2[n-1] were never written; the
        // boundary repair overwrites all three populations there.
        out.set(0, boundary_populations(bc.left_value, params[0].eta, out, 1, bc.scheme));
        out.set(n - 1, boundary_populations(bc.right_value, params[n - 1].eta, out, n - 2, bc.scheme));
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(g0[i]) || !std::isfinite(g1[i]) || !std::isfinite(g2[i])) {
            throw NonFiniteError(i, out.t);
        }
    }
}

DistributionState step(const Grid1D& grid,
                       const DistributionState& state,
                       std::span<const LatticeParams> params,
                       std::span<const double> force,
                       const BoundarySpec& bc) {
    DistributionState out(state.size(), state.t);
    step_into(grid, state, params, force, bc, out);
    return out;
}

}  // namespace vcfb
