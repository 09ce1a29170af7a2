#include "tma/nonideal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDbFloor = -240.0;

// [0, 1) from the top 53 bits; avoids std::uniform_real_distribution, whose
// output is not pinned by the standard across library implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint32_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      index};
    return std::mt19937_64(seq);
}

}  // namespace

PhaseErrorModel draw_phase_errors(int n_elements, double bound_deg, std::uint64_t seed) {
    if (n_elements < 1)
        throw std::invalid_argument("invalid-config: n_elements must be at least 1");
    if (!(bound_deg >= 0.0))
        throw std::invalid_argument("invalid-bound: bound must be nonnegative");

    PhaseErrorModel model;
    model.bound_deg = bound_deg;
    model.per_state_errors_deg.resize(n_elements, 4);
    for (int n = 0; n < n_elements; ++n) {
        auto rng = substream(seed, static_cast<std::uint32_t>(n));
        for (int k = 0; k < 4; ++k)
            model.per_state_errors_deg(n, k) = bound_deg * (2.0 * uniform01(rng) - 1.0);
    }
    return model;
}

std::vector<std::string> validate_phase_error_model(const PhaseErrorModel& m) {
    std::vector<std::string> problems;
    if (!(m.bound_deg >= 0.0)) problems.push_back("bound must be nonnegative");
    for (Eigen::Index n = 0; n < m.per_state_errors_deg.rows(); ++n)
        for (Eigen::Index k = 0; k < 4; ++k)
            if (std::abs(m.per_state_errors_deg(n, k)) > m.bound_deg + 1e-12) {
                char buf[96];
                std::snprintf(buf, sizeof(buf),
                              "error (%ld,%ld) = %.6g deg exceeds bound %.6g deg",
                              static_cast<long>(n), static_cast<long>(k),
                              m.per_state_errors_deg(n, k), m.bound_deg);
                problems.push_back(buf);
            }
    return problems;
}

ModulationSchedule apply_phase_errors(const ModulationSchedule& s,
                                      const Eigen::Array4d& errors_deg) {
    ModulationSchedule out = s;
    for (int k = 0; k < 4; ++k)
        out.phase_states[k] = s.phase_states[k] * std::polar(1.0, errors_deg[k] * kPi / 180.0);
    return out;
}

ModulationSchedule quantize_schedule(const ModulationSchedule& s, double clock_period_s,
                                     std::vector<std::string>* warnings) {
    const double clock_fraction = clock_period_s / s.period_s;
    if (!(clock_fraction > 0.0) || clock_fraction > 0.25 + 1e-12) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "invalid-clock: clock period %g of T_p outside (0, 0.25]", clock_fraction);
        throw std::invalid_argument(buf);
    }

    const double ticks_per_period = 1.0 / clock_fraction;
    if (std::abs(ticks_per_period - std::round(ticks_per_period)) > 1e-9 && warnings) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "period is not an integer number of clock ticks (%.6g ticks); window "
                      "spacings will quantize unevenly",
                      ticks_per_period);
        warnings->push_back(buf);
    }

    // Nearest tick with ties toward the earlier tick: k = ceil(x/c - 1/2).
    const auto snap = [clock_fraction](double fraction) {
        return std::ceil(fraction / clock_fraction - 0.5);
    };

    ModulationSchedule out = s;
    for (int k = 0; k < 4; ++k)
        out.start_fractions[k] = wrap_unit(snap(s.start_fractions[k]) * clock_fraction);

    double tau_ticks = snap(s.on_fraction);
    if (tau_ticks < 1.0) tau_ticks = 1.0;
    const double max_ticks = std::floor(0.25 / clock_fraction + 1e-9);
    if (tau_ticks > max_ticks) {
        tau_ticks = max_ticks;
        if (warnings)
            warnings->push_back("on-duration clamped to keep tau within a quarter period");
    }
    out.on_fraction = tau_ticks * clock_fraction;
    return out;
}

double residual_level_db(const HarmonicSpectrum& spectrum, int h) {
    const double reference = std::abs(spectrum.at(-1));
    const double numerator = std::abs(spectrum.at(h));
    if (reference < 1e-15)
        throw std::domain_error("degenerate: |A_-1| below 1e-15, no usable reference");
    const double db = 20.0 * std::log10(numerator / reference);
    return std::isfinite(db) && db > kDbFloor ? db : kDbFloor;
}

std::vector<ResidualStats> monte_carlo_residuals(double bound_deg, const std::vector<int>& orders,
                                                 int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("invalid-trials: need at least one trial");
    if (!(bound_deg >= 0.0))
        throw std::invalid_argument("invalid-bound: bound must be nonnegative");
    if (orders.empty()) return {};

    // Residuals are scale-free, so the canonical quarter-duty staircase with
    // a unit period stands in for any concrete timing.
    const ModulationSchedule ideal = build_ssb_schedule_fractions(1.0, 0.25, 0.25);

    int h_lo = -1;
    int h_hi = -1;
    for (int h : orders) {
        h_lo = std::min(h_lo, h);
        h_hi = std::max(h_hi, h);
    }

    std::vector<std::vector<double>> levels(orders.size());
    for (auto& l : levels) l.reserve(trials);

    for (int trial = 0; trial < trials; ++trial) {
        auto rng = substream(seed, static_cast<std::uint32_t>(trial));
        Eigen::Array4d errors;
        for (int k = 0; k < 4; ++k) errors[k] = bound_deg * (2.0 * uniform01(rng) - 1.0);
        const HarmonicSpectrum spectrum =
            spectrum_analytic(apply_phase_errors(ideal, errors), h_lo, h_hi);
        for (std::size_t i = 0; i < orders.size(); ++i)
            levels[i].push_back(residual_level_db(spectrum, orders[i]));
    }

    std::vector<ResidualStats> stats;
    stats.reserve(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::sort(levels[i].begin(), levels[i].end());
        const std::size_t n = levels[i].size();
        ResidualStats st;
        st.harmonic = orders[i];
        st.median_db = n % 2 == 1 ? levels[i][n / 2]
                                  : 0.5 * (levels[i][n / 2 - 1] + levels[i][n / 2]);
        const std::size_t rank_90 =
            static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(n)));
        st.p90_db = levels[i][rank_90 == 0 ? 0 : rank_90 - 1];
        st.max_db = levels[i].back();
        stats.push_back(st);
    }
    return stats;
}

}  // namespace tma
