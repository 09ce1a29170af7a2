#include "tma/array.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDbFloor = -240.0;  // 20*log10(1e-12)

double deg2rad(double deg) { return deg * kPi / 180.0; }

std::string describe(const char* fmt, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

}  // namespace

double floor_db(double ratio) {
    const double db = 20.0 * std::log10(ratio);
    return std::isfinite(db) && db > kDbFloor ? db : kDbFloor;
}

std::vector<std::string> validate_array_config(const ArrayConfig& cfg) {
    if (cfg.n_elements < 1)
        throw std::invalid_argument("invalid-config: n_elements must be at least 1");
    if (static_cast<int>(cfg.schedules.size()) != cfg.n_elements)
        throw std::invalid_argument("invalid-config: schedule count does not match n_elements");
    if (!(cfg.spacing_wavelengths > 0.0))
        throw std::invalid_argument("invalid-config: spacing must be positive");
    if (!(cfg.carrier_freq_hz > 0.0) || !(cfg.mod_freq_hz > 0.0))
        throw std::invalid_argument("invalid-config: frequencies must be positive");
    if (!(cfg.mod_freq_hz < cfg.carrier_freq_hz))
        throw std::invalid_argument("invalid-config: modulation frequency must be below carrier");

    const double period = 1.0 / cfg.mod_freq_hz;
    const double tau = cfg.schedules.front().on_fraction;
    for (const auto& s : cfg.schedules) {
        if (std::abs(s.period_s - period) > 1e-9 * period)
            throw std::invalid_argument("invalid-config: schedule period differs from 1/mod_freq");
        if (std::abs(s.on_fraction - tau) > 1e-12)
            throw std::invalid_argument("invalid-config: schedules must share one on-duration");
    }

    std::vector<std::string> warnings;
    const double ratio = cfg.mod_freq_hz / cfg.carrier_freq_hz;
    if (ratio > 0.01)
        warnings.push_back(describe(
            "modulation-to-carrier ratio %.4g exceeds 0.01; harmonic wavelengths start to differ "
            "noticeably from the carrier wavelength used for patterns",
            ratio));
    return warnings;
}

std::vector<ModulationSchedule> synthesize_steering(int n_elements, double spacing_wavelengths,
                                                    double period_s, double on_duration_s,
                                                    double steer_angle_deg) {
    if (!(std::abs(steer_angle_deg) < 90.0))
        throw std::invalid_argument(
            describe("invalid-angle: steer angle %g deg outside (-90, 90)", steer_angle_deg));
    if (n_elements < 1)
        throw std::invalid_argument("invalid-config: n_elements must be at least 1");
    if (!(spacing_wavelengths > 0.0))
        throw std::invalid_argument("invalid-config: spacing must be positive");

    const double on_fraction = on_duration_s / period_s;
    const double sin_steer = std::sin(deg2rad(steer_angle_deg));
    std::vector<ModulationSchedule> schedules;
    schedules.reserve(n_elements);
    for (int n = 0; n < n_elements; ++n) {
        const double t1_fraction = wrap_unit(-n * spacing_wavelengths * sin_steer);
        schedules.push_back(build_ssb_schedule_fractions(period_s, on_fraction, t1_fraction));
    }
    return schedules;
}

Eigen::VectorXcd element_coefficients(const ArrayConfig& cfg, int h) {
    Eigen::VectorXcd coeffs(cfg.n_elements);
    for (int n = 0; n < cfg.n_elements; ++n)
        coeffs[n] = spectrum_analytic(cfg.schedules[n], h, h).at(h);
    return coeffs;
}

namespace {

Complex array_factor_from_coeffs(const Eigen::VectorXcd& coeffs, double spacing_wavelengths,
                                 double theta_deg) {
    const double psi = 2.0 * kPi * spacing_wavelengths * std::sin(deg2rad(theta_deg));
    Complex acc(0.0, 0.0);
    for (Eigen::Index n = 0; n < coeffs.size(); ++n)
        acc += coeffs[n] * std::polar(1.0, psi * static_cast<double>(n));
    return acc;
}

}  // namespace

Complex array_factor(const ArrayConfig& cfg, int h, double theta_deg) {
    validate_array_config(cfg);
    return array_factor_from_coeffs(element_coefficients(cfg, h), cfg.spacing_wavelengths,
                                    theta_deg);
}

PatternCut pattern_cut(const ArrayConfig& cfg, int h, const Eigen::ArrayXd& theta_grid_deg) {
    validate_array_config(cfg);
    if (theta_grid_deg.size() == 0) throw std::invalid_argument("empty-grid");
    for (Eigen::Index i = 0; i < theta_grid_deg.size(); ++i) {
        if (std::abs(theta_grid_deg[i]) > 90.0 + 1e-9)
            throw std::invalid_argument("invalid-grid: angles must lie in [-90, 90]");
        if (i > 0 && !(theta_grid_deg[i] > theta_grid_deg[i - 1]))
            throw std::invalid_argument("invalid-grid: angles must be strictly increasing");
    }

    PatternCut cut;
    cut.harmonic = h;
    cut.angles_deg = theta_grid_deg;
    cut.values.resize(theta_grid_deg.size());

    const Eigen::VectorXcd coeffs = element_coefficients(cfg, h);
    for (Eigen::Index i = 0; i < theta_grid_deg.size(); ++i)
        cut.values[i] = array_factor_from_coeffs(coeffs, cfg.spacing_wavelengths,
                                                 theta_grid_deg[i]);

    double reference;
    if (h == -1) {
        reference = cut.values.abs().maxCoeff();
    } else {
        const Eigen::VectorXcd ref_coeffs = element_coefficients(cfg, -1);
        reference = 0.0;
        for (Eigen::Index i = 0; i < theta_grid_deg.size(); ++i)
            reference = std::max(reference,
                                 std::abs(array_factor_from_coeffs(ref_coeffs,
                                                                   cfg.spacing_wavelengths,
                                                                   theta_grid_deg[i])));
    }

    cut.power_db.resize(theta_grid_deg.size());
    for (Eigen::Index i = 0; i < theta_grid_deg.size(); ++i)
        cut.power_db[i] = reference > 0.0 ? floor_db(std::abs(cut.values[i]) / reference)
                                          : kDbFloor;
    return cut;
}

std::vector<std::pair<int, double>> power_spectrum_at(const ArrayConfig& cfg, double theta_deg,
                                                      int h_min, int h_max) {
    validate_array_config(cfg);
    if (h_min > h_max) throw std::invalid_argument("invalid-range: h_min > h_max");

    const double reference = std::abs(
        array_factor_from_coeffs(element_coefficients(cfg, -1), cfg.spacing_wavelengths,
                                 theta_deg));
    std::vector<std::pair<int, double>> rows;
    rows.reserve(h_max - h_min + 1);
    for (int h = h_min; h <= h_max; ++h) {
        const double mag = std::abs(array_factor(cfg, h, theta_deg));
        rows.emplace_back(h, reference > 0.0 ? floor_db(mag / reference) : kDbFloor);
    }
    return rows;
}

BeamMetrics beam_metrics(const PatternCut& cut) {
    const Eigen::ArrayXd& p = cut.power_db;
    const Eigen::ArrayXd& ang = cut.angles_deg;
    const Eigen::Index n = p.size();
    if (n < 3) throw std::domain_error("degenerate-pattern: fewer than 3 samples");

    Eigen::Index pk = 0;
    const double peak = p.maxCoeff(&pk);
    if (peak - p.minCoeff() < 1e-6)
        throw std::domain_error("degenerate-pattern: cut has no angular structure");
    for (Eigen::Index i = 0; i < n; ++i)
        if ((i > pk ? i - pk : pk - i) > 1 && p[i] >= peak - 1e-12)
            throw std::domain_error("degenerate-pattern: global maximum is not unique");

    // Main-lobe edges: first local minimum walking out from the peak, or the
    // point where the pattern has dropped 20 dB, whichever comes first.
    Eigen::Index left = pk;
    while (left > 0) {
        if (p[left - 1] >= p[left]) break;
        --left;
        if (p[left] <= peak - 20.0) break;
    }
    Eigen::Index right = pk;
    while (right < n - 1) {
        if (p[right + 1] >= p[right]) break;
        ++right;
        if (p[right] <= peak - 20.0) break;
    }

    bool found_sidelobe = false;
    double sidelobe = kDbFloor;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i >= left && i <= right) continue;
        const bool rises_left = i == 0 || p[i] >= p[i - 1];
        const bool rises_right = i == n - 1 || p[i] >= p[i + 1];
        if (rises_left && rises_right) {
            found_sidelobe = true;
            sidelobe = std::max(sidelobe, p[i]);
        }
    }
    if (!found_sidelobe)
        throw std::domain_error("degenerate-pattern: no sidelobe structure outside the main lobe");

    const double level = peak - 3.0;
    double x_left = std::numeric_limits<double>::quiet_NaN();
    for (Eigen::Index i = pk; i > 0; --i) {
        if (p[i - 1] < level && p[i] >= level) {
            x_left = ang[i - 1] + (level - p[i - 1]) * (ang[i] - ang[i - 1]) / (p[i] - p[i - 1]);
            break;
        }
    }
    double x_right = std::numeric_limits<double>::quiet_NaN();
    for (Eigen::Index i = pk; i < n - 1; ++i) {
        if (p[i] >= level && p[i + 1] < level) {
            x_right = ang[i] + (level - p[i]) * (ang[i + 1] - ang[i]) / (p[i + 1] - p[i]);
            break;
        }
    }
    if (!std::isfinite(x_left) || !std::isfinite(x_right))
        throw std::domain_error("degenerate-pattern: -3 dB crossings outside the grid");

    BeamMetrics metrics;
    metrics.peak_angle_deg = ang[pk];
    metrics.peak_db = peak;
    metrics.max_sidelobe_db = sidelobe;
    metrics.beamwidth_3db_deg = x_right - x_left;
    return metrics;
}

}  // namespace tma
