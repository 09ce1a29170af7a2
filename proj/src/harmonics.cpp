#include "tma/harmonics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDutyTol = 1e-12;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// i^(m mod 4), exact.
Complex quarter_turn(int m) {
    int r = m % 4;
    if (r < 0) r += 4;
    switch (r) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

[[noreturn]] void throw_invalid_duty(double fraction, double limit) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "invalid-duty: tau/T_p = %g outside (0, %g]", fraction, limit);
    throw std::invalid_argument(buf);
}

// Rejects schedules the Fourier sum cannot represent; SSB residuals and
// state magnitudes are the caller's business (perturbed states are fine).
void require_integrable(const ModulationSchedule& s) {
    for (const auto& violation : validate_schedule(s)) {
        if (violation.invariant == "period" || violation.invariant == "duty" ||
            violation.invariant == "overlap")
            throw std::invalid_argument(violation.invariant + ": " + violation.detail);
    }
}

// 1 - e^{-jy} without cancellation for small y.
Complex one_minus_cexp_neg(double y) {
    const double half = std::sin(0.5 * y);
    return {2.0 * half * half, std::sin(y)};
}

}  // namespace

Complex HarmonicSpectrum::at(int h) const {
    if (!contains(h)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "missing-order: h = %d not in [%d, %d]", h, h_min,
                      h_max());
        throw std::out_of_range(buf);
    }
    return coefficients[h - h_min];
}

Complex pulse_coefficient(double start_s, double on_duration_s, double period_s, Complex state,
                          int h) {
    const double ff = on_duration_s / period_s;
    if (!(ff > 0.0) || ff > 1.0 + kDutyTol) throw_invalid_duty(ff, 1.0);
    const double sf = start_s / period_s;
    const double x = kPi * h * ff;
    return state * ff * sinc(x) * std::polar(1.0, -kPi * h * (2.0 * sf + ff));
}

HarmonicSpectrum spectrum_analytic(const ModulationSchedule& s, int h_min, int h_max) {
    if (h_min > h_max) throw std::invalid_argument("invalid-range: h_min > h_max");
    require_integrable(s);

    HarmonicSpectrum out;
    out.mod_freq_hz = s.mod_freq_hz();
    out.h_min = h_min;
    out.coefficients = Eigen::ArrayXcd::Zero(h_max - h_min + 1);

    const double ff = s.on_fraction;
    for (int h = h_min; h <= h_max; ++h) {
        const double common = ff * sinc(kPi * h * ff);
        Complex acc(0.0, 0.0);
        for (int k = 0; k < 4; ++k)
            acc += s.phase_states[k] *
                   std::polar(common, -kPi * h * (2.0 * s.start_fractions[k] + ff));
        out.coefficients[h - h_min] = acc;
    }
    return out;
}

Complex coefficient_closed_form(int h, double t1_s, double on_duration_s, double period_s) {
    const double ff = on_duration_s / period_s;
    if (!(ff > 0.0) || ff > 0.25 + kDutyTol) throw_invalid_duty(ff, 0.25);
    if (h == 0) return {0.0, 0.0};
    if (h % 2 == 0) return {0.0, 0.0};  // even orders carry the exact 0 of the odd gate

    const Complex pair_gate = quarter_turn(1 + h) + Complex(1.0, 0.0);  // 0 at h = 4k+1
    const double amplitude = (2.0 / (h * kPi)) * std::sin(h * kPi * ff);
    const double t1f = wrap_unit(t1_s / period_s);
    return amplitude * pair_gate * std::polar(1.0, -kPi * h * (2.0 * t1f + ff));
}

Complex spectrum_numeric_oracle(const ModulationSchedule& s, int h, long samples) {
    if (samples < 1) throw std::invalid_argument("invalid-samples: need at least one sample");
    Complex acc(0.0, 0.0);
    const double step = 1.0 / static_cast<double>(samples);
    for (long i = 0; i < samples; ++i) {
        const double u = (static_cast<double>(i) + 0.5) * step;
        const Complex state = evaluate_waveform_fraction(s, u);
        if (state != Complex(0.0, 0.0)) acc += state * std::polar(1.0, -2.0 * kPi * h * u);
    }
    return acc * step;
}

Eigen::ArrayXcd spectrum_numeric_oracle_range(const ModulationSchedule& s, int h_min, int h_max,
                                              long samples) {
    if (h_min > h_max) throw std::invalid_argument("invalid-range: h_min > h_max");
    if (samples < 1) throw std::invalid_argument("invalid-samples: need at least one sample");

    struct Run {
        long first = 0;
        long length = 0;
        Complex state;
    };
    std::vector<Run> runs;
    const double step = 1.0 / static_cast<double>(samples);
    Complex current(0.0, 0.0);
    long run_start = 0;
    for (long i = 0; i < samples; ++i) {
        const Complex state = evaluate_waveform_fraction(s, (static_cast<double>(i) + 0.5) * step);
        if (i == 0) {
            current = state;
            continue;
        }
        if (state != current) {
            runs.push_back({run_start, i - run_start, current});
            current = state;
            run_start = i;
        }
    }
    runs.push_back({run_start, samples - run_start, current});

    Eigen::ArrayXcd out = Eigen::ArrayXcd::Zero(h_max - h_min + 1);
    for (int h = h_min; h <= h_max; ++h) {
        const double x = 2.0 * kPi * h * step;  // phase increment per sample
        Complex acc(0.0, 0.0);
        for (const Run& run : runs) {
            if (run.state == Complex(0.0, 0.0)) continue;
            if (h == 0) {
                acc += run.state * static_cast<double>(run.length);
                continue;
            }
            // sum_{i=first}^{first+len-1} e^{-j x (i + 0.5)} as a geometric series
            const Complex lead = std::polar(1.0, -x * (static_cast<double>(run.first) + 0.5));
            acc += run.state * lead * one_minus_cexp_neg(x * static_cast<double>(run.length)) /
                   one_minus_cexp_neg(x);
        }
        out[h - h_min] = acc * step;
    }
    return out;
}

bool is_suppressed(int h) {
    if (h % 2 == 0) return true;
    int r = h % 4;
    if (r < 0) r += 4;
    return r == 1;
}

double insertion_loss_db(double on_duration_s, double period_s) {
    const double ff = on_duration_s / period_s;
    if (!(ff > 0.0) || ff > 0.25 + kDutyTol) throw_invalid_duty(ff, 0.25);
    if (ff < 1e-12) return -std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(4.0 * std::sin(kPi * ff) / kPi);
}

double total_power(const ModulationSchedule& s) { return 4.0 * s.on_fraction; }

}  // namespace tma
