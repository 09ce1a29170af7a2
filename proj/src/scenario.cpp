#include "tma/scenario.hpp"

#include "tma/nonideal.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tma {

namespace {

using nlohmann::json;

double number_field(const json& value, const std::string& key) {
    if (!value.is_number())
        throw std::invalid_argument("config field '" + key + "' must be a number");
    return value.get<double>();
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

    ScenarioConfig scenario;
    for (const auto& [key, value] : doc.items()) {
        if (key == "carrier_hz") {
            scenario.carrier_hz = number_field(value, key);
        } else if (key == "mod_hz") {
            scenario.mod_hz = number_field(value, key);
        } else if (key == "n_elements") {
            if (!value.is_number_integer())
                throw std::invalid_argument("config field 'n_elements' must be an integer");
            scenario.n_elements = value.get<int>();
        } else if (key == "spacing_wavelengths") {
            scenario.spacing_wavelengths = number_field(value, key);
        } else if (key == "tau_fraction") {
            scenario.tau_fraction = number_field(value, key);
        } else if (key == "phase_error_bound_deg") {
            scenario.phase_error_bound_deg = number_field(value, key);
        } else if (key == "clock_hz") {
            if (value.is_null())
                scenario.clock_hz.reset();
            else
                scenario.clock_hz = number_field(value, key);
        } else if (key == "seed") {
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw std::invalid_argument("config field 'seed' must be a nonnegative integer");
            scenario.seed = value.get<std::uint64_t>();
        } else if (key == "t1_fractions") {
            if (!value.is_array())
                throw std::invalid_argument("config field 't1_fractions' must be an array");
            std::vector<double> fractions;
            for (const auto& item : value) fractions.push_back(number_field(item, key));
            scenario.t1_fractions = std::move(fractions);
        } else {
            throw std::invalid_argument("unknown config field '" + key + "'");
        }
    }
    validate_scenario(scenario);
    return scenario;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void validate_scenario(const ScenarioConfig& scenario) {
    if (!(scenario.carrier_hz > 0.0))
        throw std::invalid_argument("invalid-config: carrier_hz must be positive");
    if (!(scenario.mod_hz > 0.0))
        throw std::invalid_argument("invalid-config: mod_hz must be positive");
    if (!(scenario.mod_hz < scenario.carrier_hz))
        throw std::invalid_argument("invalid-config: mod_hz must be below carrier_hz");
    if (scenario.n_elements < 1)
        throw std::invalid_argument("invalid-config: n_elements must be at least 1");
    if (!(scenario.spacing_wavelengths > 0.0))
        throw std::invalid_argument("invalid-config: spacing_wavelengths must be positive");
    if (!(scenario.tau_fraction > 0.0) || scenario.tau_fraction > 0.25)
        throw std::invalid_argument("invalid-config: tau_fraction must lie in (0, 0.25]");
    if (!(scenario.phase_error_bound_deg >= 0.0))
        throw std::invalid_argument("invalid-config: phase_error_bound_deg must be nonnegative");
    if (scenario.clock_hz) {
        if (!(*scenario.clock_hz > 0.0))
            throw std::invalid_argument("invalid-config: clock_hz must be positive");
        if (*scenario.clock_hz < 4.0 * scenario.mod_hz)
            throw std::invalid_argument(
                "invalid-config: clock_hz must be at least 4x mod_hz (clock period within a "
                "quarter period)");
    }
    if (scenario.t1_fractions) {
        if (static_cast<int>(scenario.t1_fractions->size()) != scenario.n_elements)
            throw std::invalid_argument(
                "invalid-config: t1_fractions must list one value per element");
        for (double f : scenario.t1_fractions)
            if (!std::isfinite(f))
                throw std::invalid_argument("invalid-config: t1_fractions must be finite");
    }
}

BuiltArray make_array_config(const ScenarioConfig& scenario, double steer_deg) {
    validate_scenario(scenario);

    const double period_s = 1.0 / scenario.mod_hz;
    BuiltArray built;
    built.config.n_elements = scenario.n_elements;
    built.config.spacing_wavelengths = scenario.spacing_wavelengths;
    built.config.carrier_freq_hz = scenario.carrier_hz;
    built.config.mod_freq_hz = scenario.mod_hz;

    if (scenario.t1_fractions) {
        for (double f : *scenario.t1_fractions)
            built.config.schedules.push_back(
                build_ssb_schedule_fractions(period_s, scenario.tau_fraction, f));
    } else {
        built.config.schedules =
            synthesize_steering(scenario.n_elements, scenario.spacing_wavelengths, period_s,
                                scenario.tau_fraction * period_s, steer_deg);
    }

    if (scenario.clock_hz) {
        const double clock_period_s = 1.0 / *scenario.clock_hz;
        std::vector<std::string> clock_warnings;
        for (auto& s : built.config.schedules) {
            clock_warnings.clear();
            s = quantize_schedule(s, clock_period_s, &clock_warnings);
        }
        // identical per element; keep one copy
        built.warnings.insert(built.warnings.end(), clock_warnings.begin(),
                              clock_warnings.end());
    }

    if (scenario.phase_error_bound_deg > 0.0) {
        const PhaseErrorModel model = draw_phase_errors(
            scenario.n_elements, scenario.phase_error_bound_deg, scenario.seed);
        for (int n = 0; n < scenario.n_elements; ++n) {
            const Eigen::Array4d errors = model.per_state_errors_deg.row(n).transpose().array();
            built.config.schedules[n] = apply_phase_errors(built.config.schedules[n], errors);
        }
    }

    const auto config_warnings = validate_array_config(built.config);
    built.warnings.insert(built.warnings.end(), config_warnings.begin(), config_warnings.end());
    return built;
}

}  // namespace tma
