#include "tma/commands.hpp"

#include "tma/nonideal.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace tma {

namespace {

std::string f6(double v) { return format_cell("%.6f", v); }

std::string fi(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", v);
    return buf;
}

MetaBlock scenario_meta(const std::string& command, const ScenarioConfig& sc) {
    MetaBlock meta;
    meta.version = kVersion;
    meta.command = command;
    meta.seed = sc.seed;
    auto add = [&meta](const std::string& key, const std::string& csv, const std::string& json) {
        meta.config.push_back({key, csv, json});
    };
    add("carrier_hz", f6(sc.carrier_hz), f6(sc.carrier_hz));
    add("mod_hz", f6(sc.mod_hz), f6(sc.mod_hz));
    add("n_elements", fi(sc.n_elements), fi(sc.n_elements));
    add("spacing_wavelengths", f6(sc.spacing_wavelengths), f6(sc.spacing_wavelengths));
    add("tau_fraction", f6(sc.tau_fraction), f6(sc.tau_fraction));
    add("phase_error_bound_deg", f6(sc.phase_error_bound_deg), f6(sc.phase_error_bound_deg));
    if (sc.clock_hz)
        add("clock_hz", f6(*sc.clock_hz), f6(*sc.clock_hz));
    else
        add("clock_hz", "none", "null");
    return meta;
}

void add_timing_meta(MetaBlock& meta, const ScenarioConfig& sc, double steer_deg) {
    if (sc.t1_fractions)
        meta.config.push_back({"timing", "explicit", "\"explicit\""});
    else
        meta.config.push_back(
            {"timing", "steer=" + f6(steer_deg), "\"steer=" + f6(steer_deg) + "\""});
}

void require_steer_range(double steer_deg) {
    if (!(std::abs(steer_deg) < 90.0))
        throw std::invalid_argument("invalid-angle: steer angle must lie in (-90, 90)");
}

Eigen::ArrayXd degree_grid(double step_deg) {
    if (!(step_deg > 0.0)) throw std::invalid_argument("invalid-grid: step must be positive");
    const long count = static_cast<long>(std::floor(180.0 / step_deg + 1e-9)) + 1;
    Eigen::ArrayXd grid(count);
    for (long i = 0; i < count; ++i) grid[i] = std::min(-90.0 + i * step_deg, 90.0);
    return grid;
}

}  // namespace

CommandResult cmd_spectrum(const ScenarioConfig& scenario, double steer_deg, double theta_deg,
                           int h_min, int h_max) {
    require_steer_range(steer_deg);
    if (h_min > h_max) throw std::invalid_argument("invalid-range: h_min > h_max");

    CommandResult result;
    result.meta = scenario_meta("spectrum", scenario);
    add_timing_meta(result.meta, scenario, steer_deg);
    result.meta.config.push_back({"theta_deg", f6(theta_deg), f6(theta_deg)});
    result.meta.config.push_back({"h_min", fi(h_min), fi(h_min)});
    result.meta.config.push_back({"h_max", fi(h_max), fi(h_max)});

    BuiltArray built = make_array_config(scenario, steer_deg);
    result.warnings = built.warnings;

    result.table.columns = {"order", "power_db"};
    result.table.formats = {"%.0f", "%.6f"};
    SvgSeries series;
    series.label = "theta=" + f6(theta_deg);
    for (const auto& [order, db] : power_spectrum_at(built.config, theta_deg, h_min, h_max)) {
        result.table.rows.push_back({static_cast<double>(order), db});
        series.x.push_back(order);
        series.y.push_back(db);
    }
    result.svg_series.push_back(std::move(series));
    result.svg_x_label = "harmonic order";
    result.svg_y_label = "relative power (dB)";
    return result;
}

CommandResult cmd_pattern(const ScenarioConfig& scenario, double steer_deg, int harmonic,
                          double grid_step_deg) {
    require_steer_range(steer_deg);

    CommandResult result;
    result.meta = scenario_meta("pattern", scenario);
    add_timing_meta(result.meta, scenario, steer_deg);
    result.meta.config.push_back({"harmonic", fi(harmonic), fi(harmonic)});
    result.meta.config.push_back({"grid_step_deg", f6(grid_step_deg), f6(grid_step_deg)});

    BuiltArray built = make_array_config(scenario, steer_deg);
    result.warnings = built.warnings;

    const PatternCut cut = pattern_cut(built.config, harmonic, degree_grid(grid_step_deg));
    result.table.columns = {"theta_deg", "power_db"};
    result.table.formats = {"%.6f", "%.6f"};
    SvgSeries series;
    series.label = "h=" + fi(harmonic);
    for (Eigen::Index i = 0; i < cut.angles_deg.size(); ++i) {
        result.table.rows.push_back({cut.angles_deg[i], cut.power_db[i]});
        series.x.push_back(cut.angles_deg[i]);
        series.y.push_back(cut.power_db[i]);
    }
    result.svg_series.push_back(std::move(series));
    result.svg_x_label = "theta (deg)";
    result.svg_y_label = "relative power (dB)";
    return result;
}

CommandResult cmd_scan(const ScenarioConfig& scenario, double from_deg, double to_deg,
                       double step_deg, int harmonic, double grid_step_deg) {
    if (!(from_deg <= to_deg)) throw std::invalid_argument("invalid-range: from > to");
    if (!(step_deg > 0.0)) throw std::invalid_argument("invalid-range: step must be positive");
    require_steer_range(from_deg);
    require_steer_range(to_deg);

    CommandResult result;
    result.meta = scenario_meta("scan", scenario);
    result.meta.config.push_back({"from_deg", f6(from_deg), f6(from_deg)});
    result.meta.config.push_back({"to_deg", f6(to_deg), f6(to_deg)});
    result.meta.config.push_back({"step_deg", f6(step_deg), f6(step_deg)});
    result.meta.config.push_back({"harmonic", fi(harmonic), fi(harmonic)});
    result.meta.config.push_back({"grid_step_deg", f6(grid_step_deg), f6(grid_step_deg)});

    result.table.columns = {"steer_deg", "peak_angle_deg", "peak_db", "max_sidelobe_db",
                            "beamwidth_3db_deg"};
    result.table.formats = {"%.6f", "%.6f", "%.6f", "%.6f", "%.6f"};

    const Eigen::ArrayXd grid = degree_grid(grid_step_deg);
    const long steps = static_cast<long>(std::floor((to_deg - from_deg) / step_deg + 1e-9));
    for (long k = 0; k <= steps; ++k) {
        const double steer = from_deg + k * step_deg;
        BuiltArray built = make_array_config(scenario, steer);
        if (k == 0) result.warnings = built.warnings;

        const PatternCut cut = pattern_cut(built.config, harmonic, grid);
        const BeamMetrics metrics = beam_metrics(cut);
        result.table.rows.push_back({steer, metrics.peak_angle_deg, metrics.peak_db,
                                     metrics.max_sidelobe_db, metrics.beamwidth_3db_deg});

        SvgSeries series;
        series.label = "steer=" + f6(steer);
        for (Eigen::Index i = 0; i < cut.angles_deg.size(); ++i) {
            series.x.push_back(cut.angles_deg[i]);
            series.y.push_back(cut.power_db[i]);
        }
        result.svg_series.push_back(std::move(series));
    }
    result.svg_x_label = "theta (deg)";
    result.svg_y_label = "relative power (dB)";
    return result;
}

CommandResult cmd_schedule(const ScenarioConfig& scenario, double steer_deg) {
    require_steer_range(steer_deg);

    CommandResult result;
    result.meta = scenario_meta("schedule", scenario);
    add_timing_meta(result.meta, scenario, steer_deg);

    BuiltArray built = make_array_config(scenario, steer_deg);
    result.warnings = built.warnings;

    // Fraction and seconds columns carry full precision so the export can be
    // fed back through t1_fractions without losing a bit.
    result.table.columns = {"element", "t1_frac", "t2_frac", "t3_frac",  "t4_frac",
                            "tau_frac", "t1_s",   "t2_s",    "t3_s",     "t4_s",
                            "tau_s",    "minus1_phase_deg"};
    result.table.formats = {"%.0f",   "%.17g", "%.17g", "%.17g", "%.17g", "%.17g",
                            "%.17g",  "%.17g", "%.17g", "%.17g", "%.17g", "%.6f"};
    for (int n = 0; n < built.config.n_elements; ++n) {
        const ModulationSchedule& s = built.config.schedules[n];
        const Complex a_minus1 = spectrum_analytic(s, -1, -1).at(-1);
        const double phase_deg = std::arg(a_minus1) * 180.0 / std::numbers::pi;
        result.table.rows.push_back({static_cast<double>(n), s.start_fractions[0],
                                     s.start_fractions[1], s.start_fractions[2],
                                     s.start_fractions[3], s.on_fraction,
                                     s.start_fractions[0] * s.period_s,
                                     s.start_fractions[1] * s.period_s,
                                     s.start_fractions[2] * s.period_s,
                                     s.start_fractions[3] * s.period_s, s.on_duration_s(),
                                     phase_deg});
    }
    return result;
}

CommandResult cmd_sweep_loss(const ScenarioConfig& scenario,
                             const std::vector<double>& tau_fractions) {
    if (tau_fractions.empty())
        throw std::invalid_argument("invalid-range: no duty fractions given");
    for (double f : tau_fractions)
        if (!(f > 0.0) || f > 0.25)
            throw std::invalid_argument("invalid-duty: duty fractions must lie in (0, 0.25]");

    CommandResult result;
    result.meta = scenario_meta("sweep-loss", scenario);

    result.table.columns = {"tau_fraction", "loss_db"};
    result.table.formats = {"%.6f", "%.6f"};
    SvgSeries series;
    series.label = "insertion loss";
    const double period_s = 1.0 / scenario.mod_hz;
    for (double f : tau_fractions) {
        const double loss = insertion_loss_db(f * period_s, period_s);
        result.table.rows.push_back({f, loss});
        series.x.push_back(f);
        series.y.push_back(loss);
    }
    result.svg_series.push_back(std::move(series));
    result.svg_x_label = "tau / T_p";
    result.svg_y_label = "insertion loss (dB)";
    return result;
}

}  // namespace tma
