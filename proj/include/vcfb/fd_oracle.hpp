#pragma once

// Explicit finite-difference solver for u_t + a u u_x + b u_xx = m. It shares
// nothing with the lattice code beyond the problem description and serves as
// an independent cross-check.

#include <cstdint>

#include "vcfb/analytic.hpp"
#include "vcfb/lattice.hpp"

namespace vcfb {

enum class AdvectionScheme { central, upwind };

struct FdConfig {
    Grid1D grid;
    double dt_fd = 0.0;
    AdvectionScheme advection = AdvectionScheme::central;
};

inline constexpr double kFdStabilityLimit = 0.9;

/// dt_fd (2 max|b| / dx^2 + max|a u| / dx) for the field u at time t.
double fd_stability_number(const MacroField& u, const CoefficientModel& model, const FdConfig& cfg);

/// One forward-Euler step from u.t to u.t + dt_fd. Dirichlet values from bc
/// are written at both ends. Throws CflViolation (when check_stability is
/// set) and NonFiniteError.
MacroField fd_step(const MacroField& u,
                   const CoefficientModel& model,
                   const FdConfig& cfg,
                   const BoundarySpec& bc,
                   bool check_stability = true);

/// Picks dt_fd = dt / k with the smallest integer k that keeps the
/// stability number of u0 under `target`.
double fd_time_step_for(const MacroField& u0, const CoefficientModel& model, const Grid1D& grid, double dt,
                        double target = 0.8);

/// Same as above, but the stability number is probed on the reference
/// solution at `samples` evenly spaced times in [0, horizon], so coefficients
/// that grow in time are accounted for.
double fd_time_step_for(const ProblemSetup& setup, double dt, double horizon, int samples = 33,
                        double target = 0.8);

/// Time loop for the finite-difference oracle. Stability is checked at
/// launch and every 100 steps.
class FdSolver {
public:
    FdSolver(ProblemSetup setup, FdConfig cfg);

    void advance_to(double t);
    double time() const noexcept { return static_cast<double>(steps_) * cfg_.dt_fd; }
    const MacroField& velocity() const noexcept { return u_; }

private:
    ProblemSetup setup_;
    FdConfig cfg_;
    MacroField u_;
    std::int64_t steps_ = 0;
};

}  // namespace vcfb
