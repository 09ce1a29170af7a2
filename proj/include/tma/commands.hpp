#pragma once

#include "tma/report.hpp"
#include "tma/scenario.hpp"

namespace tma {

inline constexpr const char* kVersion = "0.1.0";

// Everything a study command produces: the table, its metadata, the series
// for an optional SVG rendering, and any configuration warnings (callers
// print those to stderr so output files stay clean).
struct CommandResult {
    MetaBlock meta;
    OutputTable table;
    std::vector<SvgSeries> svg_series;
    std::string svg_x_label;
    std::string svg_y_label;
    std::vector<std::string> warnings;
};

// Received power per harmonic order at angle theta, -1st order at 0 dB.
CommandResult cmd_spectrum(const ScenarioConfig& scenario, double steer_deg, double theta_deg,
                           int h_min, int h_max);

// Power pattern cut of one harmonic over [-90, 90] with the given grid step.
CommandResult cmd_pattern(const ScenarioConfig& scenario, double steer_deg, int harmonic,
                          double grid_step_deg);

// One cut per steer angle; the table summarizes each cut (peak angle/level,
// max sidelobe, -3 dB beamwidth) and the cuts become the SVG series.
CommandResult cmd_scan(const ScenarioConfig& scenario, double from_deg, double to_deg,
                       double step_deg, int harmonic, double grid_step_deg);

// Per-element timing export: window starts (fraction of period and seconds),
// tau, and the resulting -1st-harmonic phase. Timing columns use full
// precision so re-ingesting them via t1_fractions is lossless.
CommandResult cmd_schedule(const ScenarioConfig& scenario, double steer_deg);

// Insertion loss over a list of duty fractions.
CommandResult cmd_sweep_loss(const ScenarioConfig& scenario,
                             const std::vector<double>& tau_fractions);

}  // namespace tma
