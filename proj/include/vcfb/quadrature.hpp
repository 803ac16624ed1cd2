#pragma once

#include <functional>
#include <vector>

namespace vcfb {

/// Scalar function of time. An empty function means "identically zero",
/// which lets callers skip integrals that are known to vanish.
class TimeFunction {
public:
    TimeFunction() = default;
    template <typename F>
        requires std::is_invocable_r_v<double, F, double>
    TimeFunction(F fn) : fn_(std::move(fn)) {}  // NOLINT(google-explicit-constructor)

    static TimeFunction constant(double v);

    bool is_zero() const noexcept { return !fn_; }
    double operator()(double t) const { return fn_ ? fn_(t) : 0.0; }

private:
    std::function<double(double)> fn_;
};

struct QuadratureOptions {
    double tol = 1e-10;
    int max_depth = 40;
};

/// Adaptive Simpson quadrature of g over [t_lo, t_hi] (either order).
/// Throws NoConvergence if any subinterval reaches max_depth without meeting
/// its share of the tolerance.
double quadrature(const std::function<double(double)>& g,
                  double t_lo,
                  double t_hi,
                  double tol = 1e-10,
                  int max_depth = 40);

inline double quadrature(const std::function<double(double)>& g,
                         double t_lo,
                         double t_hi,
                         const QuadratureOptions& opt) {
    return quadrature(g, t_lo, t_hi, opt.tol, opt.max_depth);
}

/// Tabulated running integral I(t) = offset + \int_{t0}^{t} g(s) ds on a
/// uniform grid over [t0, t1]. Between samples it interpolates with a cubic
/// Hermite polynomial whose slopes are g itself; outside the table it falls
/// back to direct quadrature from the nearest end.
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<double(double)> g,
                       double t0,
                       double t1,
                       double spacing,
                       double offset = 0.0,
                       QuadratureOptions opt = {});

    double operator()(double t) const;

    double t0() const noexcept { return t0_; }
    double t1() const noexcept { return t0_ + h_ * static_cast<double>(values_.size() - 1); }
    std::size_t samples() const noexcept { return values_.size(); }

private:
    std::function<double(double)> g_;
    double t0_;
    double h_;
    QuadratureOptions opt_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

}  // namespace vcfb
