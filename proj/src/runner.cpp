#include "vcfb/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vcfb/errors.hpp"
#include "vcfb/fd_oracle.hpp"
#include "vcfb/simulation.hpp"

namespace vcfb {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> parse_list(const std::string& text, const std::string& key) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::vector<double> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || !std::isfinite(v)) {
            throw ConfigInvalid(fmt::format("{}: '{}' is not a number", key, token));
        }
        out.push_back(v);
    }
    return out;
}

double parse_number(const std::string& text, const std::string& key) {
    const auto values = parse_list(text, key);
    if (values.size() != 1) throw ConfigInvalid(fmt::format("{}: expected one number, got '{}'", key, text));
    return values.front();
}

bool parse_bool(const std::string& text, const std::string& key) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigInvalid(fmt::format("{}: expected a boolean, got '{}'", key, text));
}

TimeSeriesSpec& with_sin(TimeSeriesSpec& series, const std::string& text, const std::string& key) {
    const auto v = parse_list(text, key);
    if (v.size() != 3) throw ConfigInvalid(fmt::format("{}: expected 'amplitude frequency phase'", key));
    series.sin_amplitude = v[0];
    series.sin_frequency = v[1];
    series.sin_phase = v[2];
    return series;
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

std::string provenance_line(const ExperimentConfig& cfg) {
    const std::string example = cfg.example == 0 ? std::string("custom") : std::to_string(cfg.example);
    return fmt::format("# vcfb example={} dx={} dt={} eta={} bc={} generated={}\n", example, cfg.dx, cfg.dt, cfg.eta,
                       to_string(cfg.boundary_scheme), timestamp());
}

std::string num(double v) {
    if (std::isnan(v)) return "";
    return fmt::format("{:.10e}", v);
}

class ArtifactWriter {
public:
    explicit ArtifactWriter(const ExperimentConfig& cfg) : cfg_(cfg) {
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        scratch_ = cfg.outputs / fmt::format(".partial-{}", stamp);
        fs::create_directories(scratch_);
    }

    ArtifactWriter(const ArtifactWriter&) = delete;
    ArtifactWriter& operator=(const ArtifactWriter&) = delete;

    ~ArtifactWriter() {
        std::error_code ec;
        fs::remove_all(scratch_, ec);
    }

    void write(const std::string& name, const std::string& column_header, const std::string& body) {
        std::ofstream out(scratch_ / name, std::ios::binary);
        if (cfg_.write_header) out << provenance_line(cfg_);
        if (!column_header.empty()) out << column_header << '\n';
        out << body;
        if (!out) throw ConfigInvalid(fmt::format("cannot write {}", (scratch_ / name).string()));
        names_.push_back(name);
    }

    void commit() {
        for (const auto& name : names_) fs::rename(scratch_ / name, cfg_.outputs / name);
        names_.clear();
    }

private:
    const ExperimentConfig& cfg_;
    fs::path scratch_;
    std::vector<std::string> names_;
};

std::string refinement_body(const RefinementStudy& study) {
    std::string body;
    for (const auto& level : study.levels) {
        body += fmt::format("{},{},{},{}\n", num(level.dx), num(level.dt), num(level.gre), num(level.order));
    }
    return body;
}

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigInvalid(fmt::format("cannot read {}", file.string()));
    CsvTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (table.columns.empty()) {
            std::istringstream cols(line);
            std::string c;
            while (std::getline(cols, c, ',')) table.columns.push_back(c);
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string c;
        while (std::getline(cells, c, ',')) row.push_back(c.empty() ? kNaN : std::stod(c));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string tau_cell(double lo, double hi) {
    if (lo == hi) return fmt::format("{:.6g}", lo);
    return fmt::format("{:.6g}..{:.6g}", lo, hi);
}

void render_summary(const std::vector<ErrorReport>& reports, std::ostream& os) {
    std::string head = fmt::format("{:<6}", "t");
    std::string gre = fmt::format("{:<6}", "GRE");
    std::string tau = fmt::format("{:<6}", "tau");
    for (const auto& r : reports) {
        head += fmt::format("{:>18}", fmt::format("t={:.6g}", r.t));
        gre += fmt::format("{:>18}", fmt::format("{:.4e}", r.gre));
        tau += fmt::format("{:>18}", tau_cell(r.tau_min, r.tau_max));
    }
    fmt::print(os, "{}\n{}\n{}\n", head, gre, tau);
}

void render_ae(double t, const std::vector<AeSample>& samples, std::ostream& os) {
    fmt::print(os, "\npointwise comparison at t={:.6g}\n", t);
    fmt::print(os, "{:<8}{:>16}{:>16}{:>14}\n", "x", "theoretical", "computational", "AE");
    for (const auto& s : samples) {
        fmt::print(os, "{:<8.1f}{:>16.8g}{:>16.8g}{:>14.4e}\n", s.x, s.u_ref, s.u_num, s.ae);
    }
}

}  // namespace

bool TimeSeriesSpec::is_zero() const {
    return std::all_of(poly.begin(), poly.end(), [](double c) { return c == 0.0; }) && sin_amplitude == 0.0;
}

TimeFunction TimeSeriesSpec::to_function() const {
    if (is_zero()) return {};
    return TimeFunction([s = *this](double t) {
        double acc = 0.0;
        for (auto it = s.poly.rbegin(); it != s.poly.rend(); ++it) acc = acc * t + *it;
        return acc + s.sin_amplitude * std::sin(s.sin_frequency * t + s.sin_phase);
    });
}

SolitonSolutionSpec CustomSoliton::to_spec() const {
    SolitonSolutionSpec s;
    s.w = w;
    s.p = p;
    s.q = q;
    s.amplitude = amplitude;
    s.b1 = b1.to_function();
    s.b2 = b2.to_function();
    s.m = m.to_function();
    s.m_offset = m_offset;
    s.phase_offset = phase_offset;
    return s;
}

std::vector<double> ExperimentConfig::effective_snapshots() const {
    std::vector<double> times = snapshot_times;
    if (times.empty()) {
        for (double t : {0.2, 1.0, 1.8}) {
            if (t <= t_end + 1e-12) times.push_back(t);
        }
        if (times.empty() || std::abs(times.back() - t_end) > 1e-12) times.push_back(t_end);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

void ExperimentConfig::validate() const {
    if (example < 0 || example > 4) throw UnknownExample(example);
    if (example == 0 && !custom) throw ConfigInvalid("example=custom needs a [custom] section");
    if (example != 0 && (x_lo != 0.0 || x_hi != 40.0)) {
        throw ConfigInvalid("preset examples run on [0, 40]; the domain can only be changed for custom runs");
    }
    if (!(dx > 0.0) || !(dt > 0.0)) throw ConfigInvalid("dx and dt must be positive");
    if (!(t_end >= 0.0)) throw ConfigInvalid(fmt::format("t_end must be non-negative, got {}", t_end));
    if (!(eta > 0.0 && eta <= 1.0)) throw ConfigInvalid(fmt::format("eta must lie in (0, 1], got {}", eta));
    if (boundary_scheme == BoundaryScheme::periodic) {
        throw ConfigInvalid("periodic boundaries are only available to the test suite");
    }
    if (refinement_levels < 0) throw ConfigInvalid("refinement levels must be >= 0");
    (void)Grid1D::covering(x_lo, x_hi, dx, dt);
    for (double t : effective_snapshots()) {
        if (t < 0.0 || t > t_end + 1e-12) {
            throw ConfigInvalid(fmt::format("snapshot {} lies outside [0, {}]", t, t_end));
        }
        (void)whole_steps(t, dt);
    }
}

std::string to_string(BoundaryScheme scheme) {
    switch (scheme) {
        case BoundaryScheme::equilibrium_reset:
            return "equilibrium";
        case BoundaryScheme::nonequilibrium_extrapolation:
            return "extrapolation";
        case BoundaryScheme::periodic:
            return "periodic";
    }
    return "unknown";
}

BoundaryScheme parse_boundary_scheme(const std::string& text) {
    if (text == "equilibrium") return BoundaryScheme::equilibrium_reset;
    if (text == "extrapolation") return BoundaryScheme::nonequilibrium_extrapolation;
    throw ConfigInvalid(fmt::format("unknown boundary scheme '{}' (equilibrium|extrapolation)", text));
}

RefinementScaling parse_scaling(const std::string& text) {
    if (text == "acoustic") return RefinementScaling::acoustic;
    if (text == "diffusive") return RefinementScaling::diffusive;
    throw ConfigInvalid(fmt::format("unknown refinement scaling '{}' (acoustic|diffusive)", text));
}

ExperimentConfig load_config(const fs::path& file, ExperimentConfig cfg) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(file.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigInvalid(fmt::format("{}: {}", file.string(), e.what()));
    }

    for (const auto& [section, entries] : tree) {
        if (section == "experiment") {
            for (const auto& [key, node] : entries) {
                const std::string v = node.get_value<std::string>();
                if (key == "example") {
                    cfg.example = v == "custom" ? 0 : static_cast<int>(parse_number(v, key));
                } else if (key == "x_lo") {
                    cfg.x_lo = parse_number(v, key);
                } else if (key == "x_hi") {
                    cfg.x_hi = parse_number(v, key);
                } else if (key == "dx") {
                    cfg.dx = parse_number(v, key);
                } else if (key == "dt") {
                    cfg.dt = parse_number(v, key);
                } else if (key == "t_end") {
                    cfg.t_end = parse_number(v, key);
                } else if (key == "snapshots") {
                    cfg.snapshot_times = parse_list(v, key);
                } else if (key == "eta") {
                    cfg.eta = parse_number(v, key);
                } else if (key == "bc") {
                    cfg.boundary_scheme = parse_boundary_scheme(v);
                } else if (key == "out") {
                    cfg.outputs = v;
                } else if (key == "oracle") {
                    cfg.run_oracle = parse_bool(v, key);
                } else if (key == "refine") {
                    cfg.refinement_levels = static_cast<int>(parse_number(v, key));
                } else if (key == "scaling") {
                    cfg.scaling = parse_scaling(v);
                } else if (key == "refinement_time") {
                    cfg.refinement_time = parse_number(v, key);
                } else if (key == "header") {
                    cfg.write_header = parse_bool(v, key);
                } else {
                    throw ConfigInvalid(fmt::format("unknown key [experiment] {}", key));
                }
            }
        } else if (section == "custom") {
            CustomSoliton c = cfg.custom.value_or(CustomSoliton{});
            for (const auto& [key, node] : entries) {
                const std::string v = node.get_value<std::string>();
                if (key == "w") {
                    c.w = parse_number(v, key);
                } else if (key == "p") {
                    c.p = parse_number(v, key);
                } else if (key == "q") {
                    c.q = parse_number(v, key);
                } else if (key == "amplitude") {
                    c.amplitude = parse_number(v, key);
                } else if (key == "b1") {
                    c.b1.poly = parse_list(v, key);
                } else if (key == "b1_sin") {
                    with_sin(c.b1, v, key);
                } else if (key == "b2") {
                    c.b2.poly = parse_list(v, key);
                } else if (key == "b2_sin") {
                    with_sin(c.b2, v, key);
                } else if (key == "m") {
                    c.m.poly = parse_list(v, key);
                } else if (key == "m_sin") {
                    with_sin(c.m, v, key);
                } else if (key == "m_offset") {
                    c.m_offset = parse_number(v, key);
                } else if (key == "phase_offset") {
                    c.phase_offset = parse_number(v, key);
                } else {
                    throw ConfigInvalid(fmt::format("unknown key [custom] {}", key));
                }
            }
            cfg.custom = c;
        } else if (!entries.empty()) {
            throw ConfigInvalid(fmt::format("unknown section [{}]", section));
        } else {
            throw ConfigInvalid(fmt::format("key '{}' must live in a section", section));
        }
    }
    return cfg;
}

ProblemSetup make_setup(const ExperimentConfig& cfg, double dx, double dt) {
    const double horizon = std::max(cfg.t_end, cfg.refinement_time);
    if (cfg.example == 0) {
        if (!cfg.custom) throw ConfigInvalid("custom example without parameters");
        return soliton_setup(cfg.custom->to_spec(), cfg.x_lo, cfg.x_hi, dx, dt, horizon);
    }
    return example_preset(cfg.example, dx, dt, horizon).setup;
}

namespace {

MacroField sample_reference(const ProblemSetup& setup, double t) {
    MacroField ref;
    ref.t = t;
    ref.u.resize(setup.grid.nx);
    for (std::size_t i = 0; i < setup.grid.nx; ++i) ref.u[i] = setup.reference(setup.grid.x(i), t);
    return ref;
}

double max_abs(const MacroField& f) {
    double m = 0.0;
    for (double v : f.u) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

RefinementStudy refinement_study(const ExperimentConfig& cfg, int levels) {
    if (levels < 2) throw ConfigInvalid("a refinement study needs at least two levels");
    RefinementStudy study;
    std::vector<double> gres;
    std::vector<double> spacings;
    for (int k = 0; k < levels; ++k) {
        const double ratio = std::ldexp(1.0, 1 - k);  // 2, 1, 1/2, ...
        const double dx = cfg.dx * ratio;
        const double dt = cfg.scaling == RefinementScaling::acoustic ? cfg.dt * ratio : cfg.dt * ratio * ratio;
        LbmSimulation sim(make_setup(cfg, dx, dt), {cfg.eta, cfg.boundary_scheme});
        sim.advance_to(cfg.refinement_time);
        const double gre = global_relative_error(sim.velocity(), sample_reference(sim.setup(), sim.time()));

        RefinementLevel level{dx, dt, gre, kNaN};
        if (!gres.empty()) level.order = std::log2(gres.back() / gre);
        study.levels.push_back(level);
        gres.push_back(gre);
        spacings.push_back(dx);
    }
    study.fitted_order = kNaN;
    try {
        study.fitted_order = convergence_order(gres, spacings);
    } catch (const DegenerateFit&) {
    }
    return study;
}

ExperimentResult simulate(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult result;
    const ProblemSetup setup = make_setup(cfg, cfg.dx, cfg.dt);
    LbmSimulation sim(setup, {cfg.eta, cfg.boundary_scheme});
    std::optional<FdSolver> oracle;
    if (cfg.run_oracle) {
        const double dt_fd = fd_time_step_for(setup, cfg.dt, cfg.t_end);
        oracle.emplace(setup, FdConfig{setup.grid, dt_fd, AdvectionScheme::central});
    }

    const auto positions = default_ae_positions();
    for (double t : cfg.effective_snapshots()) {
        sim.advance_to(t);
        const MacroField u_num = sim.velocity();
        const MacroField u_ref = sample_reference(setup, sim.time());
        const TauRange tau = sim.tau_range();
        result.snapshots.push_back(make_error_report(setup.grid, u_num, u_ref, positions, tau.min, tau.max));
        result.profiles.push_back({sim.time(), setup.grid.nodes(), u_num, u_ref});

        if (oracle) {
            oracle->advance_to(t);
            const MacroField& u_fd = oracle->velocity();
            OracleComparison cmp;
            cmp.t = sim.time();
            cmp.gre_lbm = result.snapshots.back().gre;
            cmp.gre_fd = global_relative_error(u_fd, u_ref);
            cmp.max_diff = max_norm_difference(u_num, u_fd);
            cmp.bound = 3.0 * (cmp.gre_lbm + cmp.gre_fd) * max_abs(u_ref);
            result.oracle.push_back(cmp);
        }
    }

    if (cfg.refinement_levels > 0) result.refinement = refinement_study(cfg, cfg.refinement_levels + 1);
    return result;
}

std::string snapshot_tag(double t) { return fmt::format("{:.3f}", t); }

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result = simulate(cfg);
    ArtifactWriter writer(cfg);

    std::string summary;
    for (const auto& r : result.snapshots) {
        summary += fmt::format("{},{},{},{}\n", num(r.t), num(r.gre), num(r.tau_min), num(r.tau_max));
    }
    writer.write("summary.csv", "t,gre,tau_min,tau_max", summary);

    for (std::size_t s = 0; s < result.profiles.size(); ++s) {
        const auto& p = result.profiles[s];
        const std::string tag = snapshot_tag(p.t);
        std::string profile;
        std::string numerical = "# numerical\n";
        std::string reference = "# reference\n";
        for (std::size_t i = 0; i < p.x.size(); ++i) {
            const double ae = std::abs(p.u_ref.u[i] - p.u_num.u[i]);
            profile += fmt::format("{},{},{},{}\n", num(p.x[i]), num(p.u_num.u[i]), num(p.u_ref.u[i]), num(ae));
            numerical += fmt::format("{} {}\n", num(p.x[i]), num(p.u_num.u[i]));
            reference += fmt::format("{} {}\n", num(p.x[i]), num(p.u_ref.u[i]));
        }
        writer.write(fmt::format("profile_t{}.csv", tag), "x,u_num,u_ref,ae", profile);
        writer.write(fmt::format("plot_t{}.dat", tag), "", numerical + "\n\n" + reference);

        std::string table;
        for (const auto& a : result.snapshots[s].ae_samples) {
            table += fmt::format("{},{},{},{}\n", num(a.x), num(a.u_ref), num(a.u_num), num(a.ae));
        }
        writer.write(fmt::format("ae_table_t{}.csv", tag), "x,u_ref,u_num,ae", table);
    }

    if (!result.oracle.empty()) {
        std::string body;
        for (const auto& o : result.oracle) {
            body += fmt::format("{},{},{},{},{}\n", num(o.t), num(o.gre_lbm), num(o.gre_fd), num(o.max_diff),
                                num(o.bound));
        }
        writer.write("oracle.csv", "t,gre_lbm,gre_fd,max_diff,bound", body);
    }
    if (result.refinement) writer.write("convergence.csv", "dx,dt,gre,order", refinement_body(*result.refinement));

    writer.commit();
    return result;
}

void write_refinement(const ExperimentConfig& cfg, const RefinementStudy& study) {
    ArtifactWriter writer(cfg);
    writer.write("convergence.csv", "dx,dt,gre,order", refinement_body(study));
    writer.commit();
}

void render_result(const ExperimentResult& result, std::ostream& os) {
    if (!result.snapshots.empty()) render_summary(result.snapshots, os);
    for (const auto& r : result.snapshots) render_ae(r.t, r.ae_samples, os);
    if (!result.oracle.empty()) {
        fmt::print(os, "\nfinite-difference oracle\n{:<8}{:>14}{:>14}{:>14}{:>14}\n", "t", "GRE lbm", "GRE fd",
                   "max diff", "bound");
        for (const auto& o : result.oracle) {
            fmt::print(os, "{:<8.3g}{:>14.4e}{:>14.4e}{:>14.4e}{:>14.4e}\n", o.t, o.gre_lbm, o.gre_fd, o.max_diff,
                       o.bound);
        }
    }
    if (result.refinement) {
        fmt::print(os, "\nrefinement study\n{:<12}{:>12}{:>14}{:>10}\n", "dx", "dt", "GRE", "order");
        for (const auto& l : result.refinement->levels) {
            fmt::print(os, "{:<12.6g}{:>12.4g}{:>14.4e}{:>10.3f}\n", l.dx, l.dt, l.gre, l.order);
        }
        fmt::print(os, "fitted order {:.3f}\n", result.refinement->fitted_order);
    }
}

void render_tables(const fs::path& dir, std::ostream& os) {
    const bool has_summary = fs::exists(dir / "summary.csv");
    if (!has_summary && !fs::exists(dir / "convergence.csv")) {
        throw ConfigInvalid(fmt::format("no summary.csv or convergence.csv in {}", dir.string()));
    }
    const CsvTable summary = has_summary ? read_csv(dir / "summary.csv") : CsvTable{};
    std::vector<ErrorReport> reports;
    for (const auto& row : summary.rows) {
        if (row.size() < 4) throw ConfigInvalid("summary.csv: short row");
        ErrorReport r;
        r.t = row[0];
        r.gre = row[1];
        r.tau_min = row[2];
        r.tau_max = row[3];
        const fs::path ae_file = dir / fmt::format("ae_table_t{}.csv", snapshot_tag(r.t));
        if (fs::exists(ae_file)) {
            for (const auto& a : read_csv(ae_file).rows) {
                if (a.size() >= 4) r.ae_samples.push_back({a[0], a[1], a[2], a[3]});
            }
        }
        reports.push_back(std::move(r));
    }
    ExperimentResult result;
    result.snapshots = std::move(reports);

    if (fs::exists(dir / "convergence.csv")) {
        RefinementStudy study;
        std::vector<double> gres, spacings;
        for (const auto& row : read_csv(dir / "convergence.csv").rows) {
            if (row.size() < 4) continue;
            study.levels.push_back({row[0], row[1], row[2], row[3]});
            spacings.push_back(row[0]);
            gres.push_back(row[2]);
        }
        study.fitted_order = kNaN;
        try {
            study.fitted_order = convergence_order(gres, spacings);
        } catch (const DegenerateFit&) {
        }
        result.refinement = std::move(study);
    }
    if (fs::exists(dir / "oracle.csv")) {
        for (const auto& row : read_csv(dir / "oracle.csv").rows) {
            if (row.size() >= 5) result.oracle.push_back({row[0], row[1], row[2], row[3], row[4]});
        }
    }
    render_result(result, os);
}

}  // namespace vcfb
