#pragma once

#include <cstdint>
#include <vector>

#include "vcfb/analytic.hpp"
#include "vcfb/lattice.hpp"

namespace vcfb {

struct TauRange {
    double min = 0.0;
    double max = 0.0;
};

struct LbmOptions {
    double eta = 1.0;
    BoundaryScheme scheme = BoundaryScheme::nonequilibrium_extrapolation;
};

/// Time loop around lattice::step_into. Lattice parameters are recomputed
/// at every node from the coefficient model at the pre-step time; boundary
/// values are taken from the setup's program at the post-step time.
class LbmSimulation {
public:
    LbmSimulation(ProblemSetup setup, LbmOptions options = {});

    /// Runs whole steps until time() reaches t (rounded to the nearest step).
    /// NonFiniteError from a step is rethrown with the step index filled in.
    void advance_to(double t);
    void advance(std::int64_t steps);

    double time() const noexcept { return static_cast<double>(steps_) * setup_.grid.dt; }
    std::int64_t steps_taken() const noexcept { return steps_; }
    const Grid1D& grid() const noexcept { return setup_.grid; }
    const ProblemSetup& setup() const noexcept { return setup_; }
    const DistributionState& state() const noexcept { return current_; }
    MacroField velocity() const { return macro_velocity(current_); }

    /// Range of the tau field the next step will use.
    TauRange tau_range();

private:
    void refresh_coefficients(double t);

    ProblemSetup setup_;
    LbmOptions options_;
    DistributionState current_;
    DistributionState next_;
    std::vector<LatticeParams> params_;
    std::vector<double> force_;
    std::vector<double> xs_;
    std::int64_t steps_ = 0;
    double params_time_ = -1.0;
};

/// Number of whole steps of size dt that reach t; throws ConfigInvalid if t
/// is not a multiple of dt to 1e-9 relative.
std::int64_t whole_steps(double t, double dt);

}  // namespace vcfb
