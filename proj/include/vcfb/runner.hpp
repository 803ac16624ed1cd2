#pragma once

// Experiment orchestration behind the command-line tool.
//
// Output directory layout (all comma-separated, one column-header line,
// optionally preceded by a single '#' provenance line with a timestamp):
//   summary.csv           t,gre,tau_min,tau_max
//   profile_t<T>.csv      x,u_num,u_ref,ae
//   ae_table_t<T>.csv     x,u_ref,u_num,ae     (x = 4, 8, ..., 36)
//   plot_t<T>.dat         gnuplot blocks "x u": index 0 numerical, index 1 reference
//   oracle.csv            t,gre_lbm,gre_fd,max_diff,bound       (--oracle)
//   convergence.csv       dx,dt,gre,order                       (--refine / convergence)
// <T> is the snapshot time with three decimals, e.g. profile_t0.200.csv.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcfb/analytic.hpp"
#include "vcfb/diagnostics.hpp"
#include "vcfb/lattice.hpp"

namespace vcfb {

/// Polynomial-plus-sinusoid time functions for user-defined soliton runs.
struct TimeSeriesSpec {
    std::vector<double> poly;  // c0 + c1 t + c2 t^2 + ...
    double sin_amplitude = 0.0;
    double sin_frequency = 0.0;
    double sin_phase = 0.0;

    bool is_zero() const;
    TimeFunction to_function() const;
};

struct CustomSoliton {
    double w = 0.0;
    double p = 0.0;
    double q = 0.0;
    double amplitude = 0.0;
    TimeSeriesSpec b1;
    TimeSeriesSpec b2;
    TimeSeriesSpec m;
    double m_offset = 0.0;
    double phase_offset = 0.0;

    SolitonSolutionSpec to_spec() const;
};

enum class RefinementScaling {
    /// dx and dt halved together, c fixed.
    acoustic,
    /// dt scales with dx^2, tau fixed.
    diffusive,
};

struct ExperimentConfig {
    /// 1..4 for the presets; 0 selects `custom`.
    int example = 1;
    std::optional<CustomSoliton> custom;
    double x_lo = 0.0;
    double x_hi = 40.0;
    double dx = 0.01;
    double dt = 1e-4;
    double t_end = 1.8;
    /// Empty means {0.2, 1.0, 1.8} clipped to t_end, plus t_end itself.
    std::vector<double> snapshot_times;
    double eta = 1.0;
    BoundaryScheme boundary_scheme = BoundaryScheme::nonequilibrium_extrapolation;
    std::filesystem::path outputs = "vcfb_out";
    bool run_oracle = false;
    int refinement_levels = 0;
    RefinementScaling scaling = RefinementScaling::acoustic;
    /// Time at which the refinement study measures GRE.
    double refinement_time = 0.2;
    bool write_header = true;

    /// Snapshot list after defaults are applied.
    std::vector<double> effective_snapshots() const;
    /// Throws ConfigInvalid.
    void validate() const;
};

/// Reads a key = value file with optional [experiment] and [custom] sections
/// on top of `base`. Unknown keys are rejected. Throws ConfigInvalid.
ExperimentConfig load_config(const std::filesystem::path& file, ExperimentConfig base = {});

std::string to_string(BoundaryScheme scheme);
BoundaryScheme parse_boundary_scheme(const std::string& text);
RefinementScaling parse_scaling(const std::string& text);

/// Problem for the configured example on the given discretization.
ProblemSetup make_setup(const ExperimentConfig& cfg, double dx, double dt);

struct OracleComparison {
    double t = 0.0;
    double gre_lbm = 0.0;
    double gre_fd = 0.0;
    double max_diff = 0.0;
    /// 3 (gre_lbm + gre_fd) max|u_ref|.
    double bound = 0.0;
};

struct RefinementLevel {
    double dx = 0.0;
    double dt = 0.0;
    double gre = 0.0;
    /// Observed order against the previous level; NaN for the first.
    double order = 0.0;
};

struct RefinementStudy {
    std::vector<RefinementLevel> levels;
    /// Least-squares order over all levels (NaN with fewer than two).
    double fitted_order = 0.0;
};

struct SnapshotProfile {
    double t = 0.0;
    std::vector<double> x;
    MacroField u_num;
    MacroField u_ref;
};

struct ExperimentResult {
    std::vector<ErrorReport> snapshots;
    std::vector<SnapshotProfile> profiles;
    std::vector<OracleComparison> oracle;
    std::optional<RefinementStudy> refinement;
};

/// Runs the LBM up to every snapshot and collects error reports; optionally
/// the FD oracle and the refinement study. Does not touch the filesystem.
ExperimentResult simulate(const ExperimentConfig& cfg);

/// GRE at cfg.refinement_time on `levels` grids: 2 dx, dx, dx/2, ...
RefinementStudy refinement_study(const ExperimentConfig& cfg, int levels);

/// simulate() followed by writing every artifact to cfg.outputs. Files are
/// first written to a scratch directory and only moved into place once the
/// whole run succeeded.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes convergence.csv for a standalone study.
void write_refinement(const ExperimentConfig& cfg, const RefinementStudy& study);

/// Snapshot tag used in file names, e.g. "0.200".
std::string snapshot_tag(double t);

/// Renders the summary and AE tables found in `dir` as aligned text.
void render_tables(const std::filesystem::path& dir, std::ostream& os);
void render_result(const ExperimentResult& result, std::ostream& os);

}  // namespace vcfb
