#include "vcfb/simulation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "vcfb/coefficients.hpp"
#include "vcfb/errors.hpp"

namespace vcfb {

std::int64_t whole_steps(double t, double dt) {
    const double n = t / dt;
    const double rounded = std::round(n);
    if (t < 0.0 || std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
        throw ConfigInvalid(fmt::format("time {} is not a whole number of steps of {}", t, dt));
    }
    return static_cast<std::int64_t>(rounded);
}

LbmSimulation::LbmSimulation(ProblemSetup setup, LbmOptions options)
    : setup_(std::move(setup)),
      options_(options),
      current_(initialize(setup_.initial_field(), options.eta)),
      next_(setup_.grid.nx),
      params_(setup_.grid.nx),
      force_(setup_.grid.nx),
      xs_(setup_.grid.nodes()) {
    if (!(options_.eta > 0.0 && options_.eta <= 1.0)) {
        throw ConfigInvalid(fmt::format("eta must lie in (0, 1], got {}", options_.eta));
    }
}

void LbmSimulation::refresh_coefficients(double t) {
    if (t == params_time_) return;
    const double c = setup_.grid.c();
    const double dt = setup_.grid.dt;
    const auto& model = setup_.coefficients;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        const double x = xs_[i];
        params_[i] = solve_params(model.a(x, t), model.b(x, t), c, dt, options_.eta);
        force_[i] = model.m(x, t);
    }
    params_time_ = t;
}

TauRange LbmSimulation::tau_range() {
    refresh_coefficients(time());
    const auto [lo, hi] = std::minmax_element(params_.begin(), params_.end(),
                                              [](const auto& l, const auto& r) { return l.tau < r.tau; });
    return {lo->tau, hi->tau};
}

void LbmSimulation::advance(std::int64_t steps) {
    const double dt = setup_.grid.dt;
    for (std::int64_t k = 0; k < steps; ++k) {
        const double t = time();
        refresh_coefficients(t);
        const BoundarySpec bc = setup_.boundary.at(t + dt, options_.scheme);
        try {
            step_into(setup_.grid, current_, params_, force_, bc, next_);
        } catch (const NonFiniteError& e) {
            throw NonFiniteError(e.node(), e.time(), steps_ + 1);
        }
        std::swap(current_, next_);
        ++steps_;
        current_.t = time();
    }
}

void LbmSimulation::advance_to(double t) {
    const std::int64_t target = whole_steps(t, setup_.grid.dt);
    if (target < steps_) {
        throw ConfigInvalid(fmt::format("cannot advance backwards from t={} to t={}", time(), t));
    }
    advance(target - steps_);
}

}  // namespace vcfb
