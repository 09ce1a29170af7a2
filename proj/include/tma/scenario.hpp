#pragma once

#include "tma/array.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tma {

// Study configuration. The defaults reproduce the reference L-band setup:
// 1.16 GHz carrier, 1 MHz modulation, 8 elements at half-wavelength spacing,
// quarter-period duty, ideal timing and phases.
struct ScenarioConfig {
    double carrier_hz = 1.16e9;
    double mod_hz = 1e6;
    int n_elements = 8;
    double spacing_wavelengths = 0.5;
    double tau_fraction = 0.25;                       // tau / T_p, in (0, 1/4]
    double phase_error_bound_deg = 0.0;               // 0 = ideal states
    std::optional<double> clock_hz;                   // absent = ideal timing
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> t1_fractions;  // explicit per-element timing
};

// Parses a JSON object with the ScenarioConfig fields (all optional, unknown
// keys rejected). Throws std::runtime_error on I/O or parse problems and
// std::invalid_argument on out-of-range values.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& json_text);

void validate_scenario(const ScenarioConfig& scenario);

struct BuiltArray {
    ArrayConfig config;
    std::vector<std::string> warnings;
};

// Element schedules for the scenario: explicit t1_fractions when given, else
// steering synthesis toward steer_deg; then clock quantization and one seeded
// phase-error draw when configured.
BuiltArray make_array_config(const ScenarioConfig& scenario, double steer_deg);

}  // namespace tma
