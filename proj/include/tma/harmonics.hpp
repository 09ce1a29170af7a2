#pragma once

#include "tma/waveform.hpp"

namespace tma {

// Fourier coefficients A_h of a switching waveform over a contiguous range of
// harmonic orders. Coefficients are dimensionless, relative to a unit carrier,
// with the analysis convention A_h = (1/T_p) * integral of U(t) e^{-j 2 pi h f_p t}.
struct HarmonicSpectrum {
    double mod_freq_hz = 0.0;
    int h_min = 0;
    Eigen::ArrayXcd coefficients;  // index h - h_min

    int h_max() const { return h_min + static_cast<int>(coefficients.size()) - 1; }
    bool contains(int h) const { return coefficients.size() > 0 && h >= h_min && h <= h_max(); }
    Complex at(int h) const;  // throws std::out_of_range ("missing-order")
};

// Coefficient of one rectangular pulse holding `state` on [start, start+tau):
//   state * (tau/T_p) * sinc(pi h tau f_p) * e^{-j pi h f_p (2 start + tau)}
// with sinc(x) = sin(x)/x and sinc(0) = 1. Throws "invalid-duty" unless
// 0 < tau <= T_p.
Complex pulse_coefficient(double start_s, double on_duration_s, double period_s, Complex state,
                          int h);

// Exact sum of the four pulse coefficients for every order in [h_min, h_max].
// Accepts any phase states (perturbed, zeroed); throws on structurally broken
// schedules (bad period/duty, overlapping windows).
HarmonicSpectrum spectrum_analytic(const ModulationSchedule& s, int h_min, int h_max);

// Closed-form coefficient for SSB staircase timing:
//   0 for h = 0, else
//   (2/(h pi)) sin(h pi tau f_p) [h odd] (e^{j pi (1+h)/2} + 1) e^{-j pi h f_p (2 t1 + tau)}
// The odd-order gate is applied as an exact 0/1 factor; see README for the
// sign relative to the textbook sin(h pi / 2) form. Zero exactly at even
// orders and at h = 4k+1; agrees with spectrum_analytic at machine precision.
Complex coefficient_closed_form(int h, double t1_s, double on_duration_s, double period_s);

// Midpoint Riemann sum of the defining integral with `samples` points.
// Approximation error is O(1/samples): U is piecewise constant with at most
// eight discontinuities per period. Independent check on the analytic path.
Complex spectrum_numeric_oracle(const ModulationSchedule& s, int h, long samples);

// The same Riemann sum for a whole order range. The waveform is sampled once
// at the midpoints and runs of equal samples are summed in closed geometric
// form, which reproduces the plain per-order sum to roundoff at a fraction of
// the cost. See the unit test pinning it against spectrum_numeric_oracle.
Eigen::ArrayXcd spectrum_numeric_oracle_range(const ModulationSchedule& s, int h_min, int h_max,
                                              long samples);

// True iff order h carries no power under ideal SSB switching: h even or
// h = 4k + 1. The surviving orders are h = 4k + 3, i.e. -1, 3, -5, 7, ...
bool is_suppressed(int h);

// 20 log10 |A_-1| of the ideal staircase = 20 log10(4 sin(pi tau f_p) / pi):
// power reaching the -1st harmonic relative to an unmodulated unit carrier.
// -0.91 dB at tau = T_p/4. Returns -inf below tau = 1e-12 * T_p.
double insertion_loss_db(double on_duration_s, double period_s);

// Time-average power of U: 4 tau / T_p for unit-magnitude states. Equals
// sum over all h of |A_h|^2 (Parseval).
double total_power(const ModulationSchedule& s);

}  // namespace tma
