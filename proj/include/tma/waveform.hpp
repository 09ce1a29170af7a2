#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace tma {

using Complex = std::complex<double>;

// Periodic four-window switching plan for one array element. The modulator
// cycles the four phase states c_1..c_4, each held for on_fraction * T_p
// seconds starting at start_fractions[k] * T_p within every period, and
// outputs 0 between windows.
//
// Times are kept as dimensionless fractions of the period, which makes the
// spectral results independent of the absolute time scale; the seconds
// accessors convert on the way out.
struct ModulationSchedule {
    double period_s = 0.0;                                     // T_p > 0
    double on_fraction = 0.0;                                  // tau / T_p, in (0, 1/4]
    Eigen::Array4d start_fractions = Eigen::Array4d::Zero();   // t_k / T_p, reduced to [0,1)
    Eigen::Vector4cd phase_states = Eigen::Vector4cd::Zero();  // c_k, |c_k| = 1

    double mod_freq_hz() const { return 1.0 / period_s; }
    double on_duration_s() const { return on_fraction * period_s; }
    Eigen::Array4d window_starts_s() const { return start_fractions * period_s; }
};

// A failed schedule invariant together with the offending values, as data.
struct ScheduleViolation {
    std::string invariant;  // "period", "duty", "unit-magnitude", "overlap", "ssb-constraint"
    std::string detail;
};

// The nominal 2-bit states (1, e^{j pi/2}, -1, e^{j 3pi/2}).
Eigen::Vector4cd nominal_phase_states();

// Reduce x to [0, 1).
double wrap_unit(double x);

// Builds the single-sideband schedule: window starts t1, t1 - Tp/4,
// t1 + Tp/2, t1 + Tp/4 (reduced mod Tp) with nominal phase states. The
// quarter-period stagger turns the four states into a descending 90-degree
// phase staircase, which moves the output power to the -1st harmonic.
// Throws std::invalid_argument with "invalid-period" / "invalid-duty".
ModulationSchedule build_ssb_schedule(double period_s, double on_duration_s, double t1_s);

// Same constructor with times given as fractions of the period.
ModulationSchedule build_ssb_schedule_fractions(double period_s, double on_fraction,
                                                double t1_fraction);

// U(t): the state of the window containing t, or 0 between windows. Windows
// are half-open [t_k, t_k + tau) so a full-duty schedule tiles the period
// without double-counting. Exactly periodic in T_p.
Complex evaluate_waveform(const ModulationSchedule& s, double t_s);

// U at the dimensionless phase u = t / T_p (u may be any real).
Complex evaluate_waveform_fraction(const ModulationSchedule& s, double u);

// Advance all four window starts by delta (reduced mod T_p); states unchanged.
ModulationSchedule shift_schedule(const ModulationSchedule& s, double delta_s);

// Empty iff every invariant holds. Violations are data, not errors, so that
// deliberately degraded schedules (quantized timing, perturbed states) can be
// inspected rather than rejected. SSB timing residuals are compared with
// tolerance 1e-9 * T_p.
std::vector<ScheduleViolation> validate_schedule(const ModulationSchedule& s);

}  // namespace tma
