#include "vcfb/diagnostics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vcfb/errors.hpp"

namespace vcfb {

namespace {

void require_same_length(const MacroField& a, const MacroField& b) {
    if (a.u.size() != b.u.size()) throw LengthMismatch(a.u.size(), b.u.size());
}

}  // namespace

std::vector<double> absolute_error(const MacroField& u_num, const MacroField& u_ref) {
    require_same_length(u_num, u_ref);
    std::vector<double> ae(u_num.u.size());
    for (std::size_t i = 0; i < ae.size(); ++i) ae[i] = std::abs(u_ref.u[i] - u_num.u[i]);
    return ae;
}

double global_relative_error(const MacroField& u_num, const MacroField& u_ref) {
    require_same_length(u_num, u_ref);
    double err = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < u_num.u.size(); ++i) {
        err += std::abs(u_ref.u[i] - u_num.u[i]);
        norm += std::abs(u_ref.u[i]);
    }
    if (!(norm > 0.0)) throw ZeroReferenceNorm("reference field has zero L1 norm");
    return err / norm;
}

double max_norm_difference(const MacroField& lhs, const MacroField& rhs) {
    require_same_length(lhs, rhs);
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.u.size(); ++i) worst = std::max(worst, std::abs(lhs.u[i] - rhs.u[i]));
    return worst;
}

double convergence_order(std::span<const double> errors, std::span<const double> spacings) {
    if (errors.size() != spacings.size()) {
        throw DegenerateFit(fmt::format("{} errors for {} spacings", errors.size(), spacings.size()));
    }
    if (errors.size() < 2) throw DegenerateFit("need at least two refinement levels");
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
            throw DegenerateFit(fmt::format("error {} at level {} is not positive", errors[i], i));
        }
        if (!(spacings[i] > 0.0)) throw DegenerateFit("spacings must be positive");
        if (i > 0 && !(spacings[i] < spacings[i - 1])) {
            throw DegenerateFit("spacings must be strictly decreasing");
        }
    }

    const auto n = static_cast<double>(errors.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        const double lx = std::log(spacings[i]);
        const double ly = std::log(errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

std::vector<double> default_ae_positions() {
    std::vector<double> xs;
    for (int k = 1; k <= 9; ++k) xs.push_back(4.0 * k);
    return xs;
}

ErrorReport make_error_report(const Grid1D& grid,
                              const MacroField& u_num,
                              const MacroField& u_ref,
                              std::span<const double> sample_x,
                              double tau_min,
                              double tau_max) {
    ErrorReport report;
    report.t = u_num.t;
    report.gre = global_relative_error(u_num, u_ref);
    report.tau_min = tau_min;
    report.tau_max = tau_max;
    for (const double x : sample_x) {
        const double s = std::round((x - grid.x0) / grid.dx);
        if (s < 0.0 || s > static_cast<double>(grid.nx - 1)) continue;
        const auto i = static_cast<std::size_t>(s);
        report.ae_samples.push_back({grid.x(i), u_ref.u[i], u_num.u[i], std::abs(u_ref.u[i] - u_num.u[i])});
    }
    return report;
}

}  // namespace vcfb
