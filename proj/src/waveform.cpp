#include "tma/waveform.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tma {

namespace {

constexpr double kDutyTol = 1e-12;  // slack for tau/T_p landing 1 ulp past 1/4
constexpr double kSsbTol = 1e-9;    // SSB timing tolerance, fractions of T_p

std::string describe(const char* fmt, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b, c);
    return buf;
}

}  // namespace

Eigen::Vector4cd nominal_phase_states() {
    Eigen::Vector4cd c;
    c << Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(0.0, -1.0);
    return c;
}

double wrap_unit(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;  // guards the rounding case x = -eps
    return r;
}

ModulationSchedule build_ssb_schedule_fractions(double period_s, double on_fraction,
                                                double t1_fraction) {
    if (!(period_s > 0.0) || !std::isfinite(period_s))
        throw std::invalid_argument(describe("invalid-period: T_p = %g s must be positive",
                                             period_s));
    if (!(on_fraction > 0.0) || on_fraction > 0.25 + kDutyTol)
        throw std::invalid_argument(describe(
            "invalid-duty: tau/T_p = %g outside (0, 0.25]", on_fraction));

    ModulationSchedule s;
    s.period_s = period_s;
    s.on_fraction = on_fraction;
    const double t1 = wrap_unit(t1_fraction);
    s.start_fractions << wrap_unit(t1), wrap_unit(t1 - 0.25), wrap_unit(t1 + 0.5),
        wrap_unit(t1 + 0.25);
    s.phase_states = nominal_phase_states();
    return s;
}

ModulationSchedule build_ssb_schedule(double period_s, double on_duration_s, double t1_s) {
    if (!(period_s > 0.0) || !std::isfinite(period_s))
        throw std::invalid_argument(describe("invalid-period: T_p = %g s must be positive",
                                             period_s));
    return build_ssb_schedule_fractions(period_s, on_duration_s / period_s, t1_s / period_s);
}

Complex evaluate_waveform_fraction(const ModulationSchedule& s, double u) {
    const double phase = wrap_unit(u);
    for (int k = 0; k < 4; ++k) {
        const double offset = wrap_unit(phase - s.start_fractions[k]);
        if (offset < s.on_fraction) return s.phase_states[k];
    }
    return Complex(0.0, 0.0);
}

Complex evaluate_waveform(const ModulationSchedule& s, double t_s) {
    return evaluate_waveform_fraction(s, t_s / s.period_s);
}

ModulationSchedule shift_schedule(const ModulationSchedule& s, double delta_s) {
    ModulationSchedule out = s;
    const double delta = delta_s / s.period_s;
    for (int k = 0; k < 4; ++k) out.start_fractions[k] = wrap_unit(s.start_fractions[k] + delta);
    return out;
}

std::vector<ScheduleViolation> validate_schedule(const ModulationSchedule& s) {
    std::vector<ScheduleViolation> v;

    if (!(s.period_s > 0.0) || !std::isfinite(s.period_s)) {
        v.push_back({"period", describe("T_p = %g s is not positive", s.period_s)});
        return v;  // everything below is meaningless without a period
    }
    if (!(s.on_fraction > 0.0) || s.on_fraction > 0.25 + kDutyTol)
        v.push_back({"duty", describe("tau/T_p = %g outside (0, 0.25]", s.on_fraction)});

    for (int k = 0; k < 4; ++k) {
        const double mag = std::abs(s.phase_states[k]);
        if (std::abs(mag - 1.0) > 1e-12)
            v.push_back({"unit-magnitude", describe("|c_%g| = %.15g", k + 1.0, mag)});
    }

    // Pairwise window intersection on the circle: [0, tau) and [g, g+tau)
    // intersect iff g < tau or g > 1 - tau.
    const double tau = s.on_fraction;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const double gap = wrap_unit(s.start_fractions[b] - s.start_fractions[a]);
            if (gap < tau - kDutyTol && gap > kDutyTol)
                v.push_back({"overlap", describe("windows %g and %g overlap (gap %.15g of T_p)",
                                                 a + 1.0, b + 1.0, gap)});
            else if (gap > 1.0 - tau + kDutyTol)
                v.push_back({"overlap", describe("windows %g and %g overlap (gap %.15g of T_p)",
                                                 b + 1.0, a + 1.0, 1.0 - gap)});
            else if (gap <= kDutyTol)
                v.push_back({"overlap", describe("windows %g and %g coincide", a + 1.0, b + 1.0)});
        }

    const auto& t = s.start_fractions;
    const double d31 = wrap_unit(t[2] - t[0]);
    const double d42 = wrap_unit(t[3] - t[1]);
    const double d12 = wrap_unit(t[0] - t[1]);
    if (std::abs(d31 - 0.5) > kSsbTol)
        v.push_back({"ssb-constraint", describe("t3 - t1 = %.15g T_p, expected 0.5 T_p", d31)});
    if (std::abs(d42 - 0.5) > kSsbTol)
        v.push_back({"ssb-constraint", describe("t4 - t2 = %.15g T_p, expected 0.5 T_p", d42)});
    if (std::abs(d12 - 0.25) > kSsbTol)
        v.push_back({"ssb-constraint", describe("t1 - t2 = %.15g T_p, expected 0.25 T_p", d12)});

    return v;
}

}  // namespace tma
