#pragma once

#include <span>
#include <vector>

#include "vcfb/lattice.hpp"

namespace vcfb {

/// |u_num - u_ref| pointwise. Throws LengthMismatch.
std::vector<double> absolute_error(const MacroField& u_num, const MacroField& u_ref);

/// sum |u_ref - u_num| / sum |u_ref| over every node, boundaries included.
/// Throws LengthMismatch, ZeroReferenceNorm.
double global_relative_error(const MacroField& u_num, const MacroField& u_ref);

/// max |u_num - u_ref|. Throws LengthMismatch.
double max_norm_difference(const MacroField& lhs, const MacroField& rhs);

/// Least-squares slope of log(error) against log(spacing). Needs at least two
/// points, strictly decreasing spacings and positive errors; otherwise
/// throws DegenerateFit.
double convergence_order(std::span<const double> errors, std::span<const double> spacings);

struct AeSample {
    double x = 0.0;
    double u_ref = 0.0;
    double u_num = 0.0;
    double ae = 0.0;
};

struct ErrorReport {
    double t = 0.0;
    double gre = 0.0;
    std::vector<AeSample> ae_samples;
    double tau_min = 0.0;
    double tau_max = 0.0;
};

/// Sample points used for the pointwise tables: x = 4, 8, ..., 36.
std::vector<double> default_ae_positions();

/// Builds the report for one snapshot. Each requested position is mapped to
/// the nearest grid node.
ErrorReport make_error_report(const Grid1D& grid,
                              const MacroField& u_num,
                              const MacroField& u_ref,
                              std::span<const double> sample_x,
                              double tau_min,
                              double tau_max);

}  // namespace vcfb
