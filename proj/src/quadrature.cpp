#include "vcfb/quadrature.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"

namespace vcfb {

TimeFunction TimeFunction::constant(double v) {
    if (v == 0.0) return {};
    return TimeFunction([v](double) { return v; });
}

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic Lyness recursion; the extrapolated value S2 + (S2 - S1)/15 is
// returned once |S2 - S1| <= 15 tol.
double refine(const std::function<double(double)>& g, const Panel& p, double tol, int depth, int max_depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;

    if (!std::isfinite(delta)) {
        throw NoConvergence(fmt::format("non-finite integrand on [{}, {}]", p.a, p.b));
    }
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
        throw NoConvergence(fmt::format("adaptive Simpson hit depth {} on [{}, {}] (error estimate {})",
                                        max_depth, p.a, p.b, std::abs(delta) / 15.0));
    }
    return refine(g, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1, max_depth) +
           refine(g, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double quadrature(const std::function<double(double)>& g, double t_lo, double t_hi, double tol, int max_depth) {
    if (!(tol > 0.0)) throw NoConvergence(fmt::format("tolerance must be positive, got {}", tol));
    if (t_lo == t_hi) return 0.0;
    if (t_hi < t_lo) return -quadrature(g, t_hi, t_lo, tol, max_depth);

    const double m = 0.5 * (t_lo + t_hi);
    const double fa = g(t_lo);
    const double fm = g(m);
    const double fb = g(t_hi);
    const Panel root{t_lo, m, t_hi, fa, fm, fb, simpson(t_lo, t_hi, fa, fm, fb)};
    return refine(g, root, tol, 0, max_depth);
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> g,
                                       double t0,
                                       double t1,
                                       double spacing,
                                       double offset,
                                       QuadratureOptions opt)
    : g_(std::move(g)), t0_(t0), h_(spacing), opt_(opt) {
    if (!(spacing > 0.0) || !(t1 >= t0)) {
        throw ConfigInvalid(fmt::format("bad integral table range [{}, {}] spacing {}", t0, t1, spacing));
    }
    const auto intervals = static_cast<std::size_t>(std::ceil((t1 - t0) / spacing - 1e-9));
    values_.resize(intervals + 1);
    slopes_.resize(intervals + 1);
    values_[0] = offset;
    slopes_[0] = g_(t0_);
    // Per-panel tolerance keeps the accumulated error at opt.tol overall.
    const double panel_tol = opt_.tol / static_cast<double>(std::max<std::size_t>(intervals, 1));
    for (std::size_t k = 1; k <= intervals; ++k) {
        const double a = t0_ + h_ * static_cast<double>(k - 1);
        const double b = t0_ + h_ * static_cast<double>(k);
        values_[k] = values_[k - 1] + quadrature(g_, a, b, panel_tol, opt_.max_depth);
        slopes_[k] = g_(b);
    }
}

double CumulativeIntegral::operator()(double t) const {
    const double end = t1();
    if (t < t0_) return values_.front() - quadrature(g_, t, t0_, opt_);
    if (t > end) return values_.back() + quadrature(g_, end, t, opt_);

    if (values_.size() == 1) return values_[0];

    const double s = (t - t0_) / h_;
    auto k = static_cast<std::size_t>(s);
    if (k >= values_.size() - 1) k = values_.size() - 2;
    const double r = s - static_cast<double>(k);

    const double r2 = r * r;
    const double r3 = r2 * r;
    const double h00 = 2.0 * r3 - 3.0 * r2 + 1.0;
    const double h10 = r3 - 2.0 * r2 + r;
    const double h01 = -2.0 * r3 + 3.0 * r2;
    const double h11 = r3 - r2;
    return h00 * values_[k] + h10 * h_ * slopes_[k] + h01 * values_[k + 1] + h11 * h_ * slopes_[k + 1];
}

}  // namespace vcfb
