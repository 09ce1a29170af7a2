// Command-line front end for the time-modulated-array simulator: spectrum,
// pattern, scan, schedule export and insertion-loss sweep, with CSV/JSON
// tables and optional SVG plots.

#include "tma/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string format = "csv";
    std::string svg_path;
    std::string out_path;
    std::optional<double> clock_hz;
    std::optional<double> error_bound_deg;
    std::optional<long long> seed;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Scenario config JSON");
    cmd->add_option("--clock-hz", flags.clock_hz, "Controller clock (overrides config)");
    cmd->add_option("--error-bound-deg", flags.error_bound_deg,
                    "Phase error bound in degrees (overrides config)");
    cmd->add_option("--seed", flags.seed, "RNG seed (overrides config)");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--svg", flags.svg_path, "Write an SVG plot to this path");
    cmd->add_option("--out", flags.out_path, "Write the table to this path (default stdout)");
}

tma::ScenarioConfig resolve_scenario(const CommonFlags& flags) {
    tma::ScenarioConfig scenario;
    if (!flags.config_path.empty()) scenario = tma::load_scenario(flags.config_path);
    if (flags.clock_hz) scenario.clock_hz = *flags.clock_hz;
    if (flags.error_bound_deg) scenario.phase_error_bound_deg = *flags.error_bound_deg;
    if (flags.seed) {
        if (*flags.seed < 0) throw std::invalid_argument("invalid-seed: seed must be nonnegative");
        scenario.seed = static_cast<std::uint64_t>(*flags.seed);
    }
    tma::validate_scenario(scenario);
    return scenario;
}

int emit(const tma::CommandResult& result, const CommonFlags& flags) {
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!flags.out_path.empty()) {
        file.open(flags.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << flags.out_path << "\n";
            return 1;
        }
        out = &file;
    }
    if (flags.format == "json")
        tma::write_json(*out, result.meta, result.table);
    else
        tma::write_csv(*out, result.meta, result.table);

    if (!flags.svg_path.empty()) {
        if (result.svg_series.empty()) {
            std::cerr << "warning: this command has no plot; --svg ignored\n";
        } else {
            std::ofstream svg(flags.svg_path, std::ios::binary);
            if (!svg) {
                std::cerr << "error: cannot open SVG file " << flags.svg_path << "\n";
                return 1;
            }
            tma::write_svg(svg, result.svg_series, result.svg_x_label, result.svg_y_label);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-sideband time-modulated array simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    double steer_deg = 0.0;
    double theta_deg = 0.0;
    int harmonic = -1;
    int h_min = -5;
    int h_max = 5;
    double grid_step_deg = 0.1;
    double from_deg = -40.0;
    double to_deg = 40.0;
    double step_deg = 10.0;
    double sweep_from = 0.025;
    double sweep_to = 0.25;
    double sweep_step = 0.025;

    auto* spectrum = app.add_subcommand("spectrum", "Received power per harmonic order");
    add_common_flags(spectrum, flags);
    spectrum->add_option("--steer", steer_deg, "Steer angle in degrees");
    spectrum->add_option("--theta", theta_deg, "Observation angle in degrees");
    spectrum->add_option("--h-min", h_min, "Lowest harmonic order");
    spectrum->add_option("--h-max", h_max, "Highest harmonic order");

    auto* pattern = app.add_subcommand("pattern", "Power pattern cut of one harmonic");
    add_common_flags(pattern, flags);
    pattern->add_option("--steer", steer_deg, "Steer angle in degrees");
    pattern->add_option("--harmonic", harmonic, "Harmonic order");
    pattern->add_option("--grid-step", grid_step_deg, "Angle grid step in degrees");

    auto* scan = app.add_subcommand("scan", "Beam scan summary over a steer range");
    add_common_flags(scan, flags);
    scan->add_option("--from", from_deg, "First steer angle in degrees");
    scan->add_option("--to", to_deg, "Last steer angle in degrees");
    scan->add_option("--step", step_deg, "Steer step in degrees");
    scan->add_option("--harmonic", harmonic, "Harmonic order");
    scan->add_option("--grid-step", grid_step_deg, "Angle grid step in degrees");

    auto* schedule = app.add_subcommand("schedule", "Per-element switching timings");
    add_common_flags(schedule, flags);
    schedule->add_option("--steer", steer_deg, "Steer angle in degrees");

    auto* sweep = app.add_subcommand("sweep-loss", "Insertion loss over duty fractions");
    add_common_flags(sweep, flags);
    sweep->add_option("--from", sweep_from, "First tau fraction");
    sweep->add_option("--to", sweep_to, "Last tau fraction");
    sweep->add_option("--step", sweep_step, "Tau fraction step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    tma::ScenarioConfig scenario;
    try {
        scenario = resolve_scenario(flags);

        // argument screening: usage errors exit 1 before any computation
        if (spectrum->parsed() || pattern->parsed() || schedule->parsed()) {
            if (!(std::abs(steer_deg) < 90.0)) throw std::invalid_argument("invalid-angle: steer");
        }
        if (spectrum->parsed()) {
            if (!(std::abs(theta_deg) <= 90.0))
                throw std::invalid_argument("invalid-angle: theta outside [-90, 90]");
            if (h_min > h_max) throw std::invalid_argument("invalid-range: h_min > h_max");
        }
        if (pattern->parsed() || scan->parsed()) {
            if (!(grid_step_deg > 0.0) || grid_step_deg > 180.0)
                throw std::invalid_argument("invalid-grid: grid step outside (0, 180]");
        }
        if (scan->parsed()) {
            if (!(from_deg <= to_deg) || !(step_deg > 0.0))
                throw std::invalid_argument("invalid-range: need from <= to and step > 0");
            if (!(std::abs(from_deg) < 90.0) || !(std::abs(to_deg) < 90.0))
                throw std::invalid_argument("invalid-angle: steer range outside (-90, 90)");
        }
        if (sweep->parsed()) {
            if (!(sweep_from <= sweep_to) || !(sweep_step > 0.0))
                throw std::invalid_argument("invalid-range: need from <= to and step > 0");
            if (!(sweep_from > 0.0) || sweep_to > 0.25)
                throw std::invalid_argument("invalid-duty: fractions must lie in (0, 0.25]");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        tma::CommandResult result;
        if (spectrum->parsed()) {
            result = tma::cmd_spectrum(scenario, steer_deg, theta_deg, h_min, h_max);
        } else if (pattern->parsed()) {
            result = tma::cmd_pattern(scenario, steer_deg, harmonic, grid_step_deg);
        } else if (scan->parsed()) {
            result = tma::cmd_scan(scenario, from_deg, to_deg, step_deg, harmonic, grid_step_deg);
        } else if (schedule->parsed()) {
            result = tma::cmd_schedule(scenario, steer_deg);
        } else {
            std::vector<double> fractions;
            for (long k = 0;; ++k) {
                const double f = sweep_from + k * sweep_step;
                if (f > sweep_to + 1e-12) break;
                fractions.push_back(f);
            }
            result = tma::cmd_sweep_loss(scenario, fractions);
        }
        return emit(result, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
