#pragma once

#include "tma/harmonics.hpp"

#include <cstdint>

namespace tma {

// Per-state phase offsets modeling delay-line errors, one row of four angles
// per element, all bounded by |eps| <= bound.
struct PhaseErrorModel {
    Eigen::MatrixX4d per_state_errors_deg;
    double bound_deg = 0.0;
};

// Uniform draws on [-bound, +bound], one 4-vector per element. Uses
// mt19937_64 with per-element substreams derived from (seed, element) via
// seed_seq and maps the high 53 bits to [0,1), so results are identical
// across platforms and independent of evaluation order.
PhaseErrorModel draw_phase_errors(int n_elements, double bound_deg, std::uint64_t seed);

std::vector<std::string> validate_phase_error_model(const PhaseErrorModel& m);

// State k becomes c_k * e^{j eps_k}; timing untouched.
ModulationSchedule apply_phase_errors(const ModulationSchedule& s,
                                      const Eigen::Array4d& errors_deg);

// Snap window starts to the nearest controller tick (ties toward the earlier
// tick) and tau likewise, clamped to [1 tick, T_p/4]. The SSB timing relations
// may then hold only approximately; validate_schedule reports the residuals.
// Appends to *warnings when T_p is not an integer number of ticks or tau was
// clamped. Throws "invalid-clock" unless 0 < clock_period <= T_p/4.
ModulationSchedule quantize_schedule(const ModulationSchedule& s, double clock_period_s,
                                     std::vector<std::string>* warnings = nullptr);

// 20 log10(|A_h| / |A_-1|), floored at -240 dB. Throws "missing-order" when
// the spectrum lacks h or -1 and "degenerate" when |A_-1| < 1e-15.
double residual_level_db(const HarmonicSpectrum& spectrum, int h);

struct ResidualStats {
    int harmonic = 0;
    double median_db = 0.0;
    double p90_db = 0.0;
    double max_db = 0.0;
};

// Residual sideband statistics of the quarter-duty staircase under random
// per-state phase errors, uniform on [-bound, +bound]. Per-trial substreams
// are derived from (seed, trial), so the statistics are bit-reproducible and
// independent of evaluation order. median = midpoint of the two central order
// statistics for even trial counts; p90 = nearest-rank 90th percentile.
std::vector<ResidualStats> monte_carlo_residuals(double bound_deg, const std::vector<int>& orders,
                                                 int trials, std::uint64_t seed);

}  // namespace tma
