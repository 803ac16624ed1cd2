#include "vcfb/fd_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"
#include "vcfb/simulation.hpp"

namespace vcfb {

double fd_stability_number(const MacroField& u, const CoefficientModel& model, const FdConfig& cfg) {
    const Grid1D& g = cfg.grid;
    double diff = 0.0;
    double adv = 0.0;
    for (std::size_t i = 0; i < u.u.size(); ++i) {
        const double x = g.x(i);
        diff = std::max(diff, std::abs(model.b(x, u.t)));
        adv = std::max(adv, std::abs(model.a(x, u.t) * u.u[i]));
    }
    return cfg.dt_fd * (2.0 * diff / (g.dx * g.dx) + adv / g.dx);
}

MacroField fd_step(const MacroField& u,
                   const CoefficientModel& model,
                   const FdConfig& cfg,
                   const BoundarySpec& bc,
                   bool check_stability) {
    const Grid1D& g = cfg.grid;
    const std::size_t n = u.u.size();
    if (n != g.nx) throw LengthMismatch(n, g.nx);
    if (check_stability) {
        const double number = fd_stability_number(u, model, cfg);
        if (number > kFdStabilityLimit) throw CflViolation(number, kFdStabilityLimit);
    }

    const double t = u.t;
    const double inv_dx = 1.0 / g.dx;
    const double inv_dx2 = inv_dx * inv_dx;
    const std::vector<double>& v = u.u;

    MacroField out;
    out.t = t + cfg.dt_fd;
    out.u.resize(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = g.x(i);
        const double a = model.a(x, t);
        const double b = model.b(x, t);
        const double m = model.m(x, t);

        double ux = 0.0;
        if (cfg.advection == AdvectionScheme::central) {
            ux = 0.5 * (v[i + 1] - v[i - 1]) * inv_dx;
        } else if (a * v[i] > 0.0) {
            ux = (v[i] - v[i - 1]) * inv_dx;
        } else {
            ux = (v[i + 1] - v[i]) * inv_dx;
        }
        const double uxx = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_dx2;
        out.u[i] = v[i] + cfg.dt_fd * (-a * v[i] * ux - b * uxx + m);
    }
    out.u.front() = bc.left_value;
    out.u.back() = bc.right_value;

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(out.u[i])) throw NonFiniteError(i, out.t);
    }
    return out;
}

double fd_time_step_for(const MacroField& u0, const CoefficientModel& model, const Grid1D& grid, double dt,
                        double target) {
    FdConfig probe{grid, 1.0, AdvectionScheme::central};
    const double per_unit = fd_stability_number(u0, model, probe);
    if (!(per_unit > 0.0)) return dt;
    const double k = std::max(1.0, std::ceil(dt * per_unit / target));
    return dt / k;
}

double fd_time_step_for(const ProblemSetup& setup, double dt, double horizon, int samples, double target) {
    if (samples < 1) throw ConfigInvalid("need at least one probe time");
    FdConfig probe{setup.grid, 1.0, AdvectionScheme::central};
    double per_unit = 0.0;
    for (int s = 0; s < samples; ++s) {
        MacroField u;
        u.t = samples == 1 ? 0.0 : horizon * static_cast<double>(s) / static_cast<double>(samples - 1);
        u.u.resize(setup.grid.nx);
        for (std::size_t i = 0; i < setup.grid.nx; ++i) u.u[i] = setup.reference(setup.grid.x(i), u.t);
        per_unit = std::max(per_unit, fd_stability_number(u, setup.coefficients, probe));
    }
    if (!(per_unit > 0.0)) return dt;
    const double k = std::max(1.0, std::ceil(dt * per_unit / target));
    return dt / k;
}

FdSolver::FdSolver(ProblemSetup setup, FdConfig cfg)
    : setup_(std::move(setup)), cfg_(std::move(cfg)), u_(setup_.initial_field()) {
    if (!(cfg_.dt_fd > 0.0)) throw ConfigInvalid(fmt::format("dt_fd must be positive, got {}", cfg_.dt_fd));
    const double number = fd_stability_number(u_, setup_.coefficients, cfg_);
    if (number > kFdStabilityLimit) throw CflViolation(number, kFdStabilityLimit);
}

void FdSolver::advance_to(double t) {
    const std::int64_t target = whole_steps(t, cfg_.dt_fd);
    if (target < steps_) throw ConfigInvalid("cannot advance the oracle backwards");
    while (steps_ < target) {
        const double t_next = static_cast<double>(steps_ + 1) * cfg_.dt_fd;
        const bool check = steps_ % 100 == 0;
        try {
            u_ = fd_step(u_, setup_.coefficients, cfg_, setup_.boundary.at(t_next, BoundaryScheme::equilibrium_reset),
                         check);
        } catch (const NonFiniteError& e) {
            throw NonFiniteError(e.node(), e.time(), steps_ + 1);
        }
        ++steps_;
        u_.t = time();
    }
}

}  // namespace vcfb
