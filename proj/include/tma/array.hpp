#pragma once

#include "tma/harmonics.hpp"

#include <utility>

namespace tma {

// Uniform linear array of modulated elements. Spacing is in carrier
// wavelengths; all harmonics are evaluated at the carrier wavelength (the
// relative shift f_p/f_c is negligible for the intended setups and a warning
// is raised past 1%).
struct ArrayConfig {
    int n_elements = 0;
    double spacing_wavelengths = 0.0;
    double carrier_freq_hz = 0.0;
    double mod_freq_hz = 0.0;
    std::vector<ModulationSchedule> schedules;  // one per element, shared T_p and tau
};

// Sampled array-factor power pattern at one harmonic. power_db is normalized
// to the peak of the -1st-harmonic cut on the same grid, floored at -240 dB.
struct PatternCut {
    int harmonic = 0;
    Eigen::ArrayXd angles_deg;
    Eigen::ArrayXcd values;
    Eigen::ArrayXd power_db;
};

struct BeamMetrics {
    double peak_angle_deg = 0.0;
    double peak_db = 0.0;
    double max_sidelobe_db = 0.0;
    double beamwidth_3db_deg = 0.0;
};

// dB of a linear ratio with the -240 dB floor used throughout.
double floor_db(double ratio);

// Returns warnings (modulation ratio, ...); throws on hard invariant breaks.
std::vector<std::string> validate_array_config(const ArrayConfig& cfg);

// Per-element schedules steering the -1st-harmonic beam to steer_angle:
// element n starts its first window at frac(-n * spacing * sin(steer)) of the
// period, so the modulation phases form the progressive phase of a
// conventional phased array. Element 0 is the phase reference (t1 = 0).
std::vector<ModulationSchedule> synthesize_steering(int n_elements, double spacing_wavelengths,
                                                    double period_s, double on_duration_s,
                                                    double steer_angle_deg);

// A_h,n of every element at order h.
Eigen::VectorXcd element_coefficients(const ArrayConfig& cfg, int h);

// Sum over elements of A_h,n e^{j 2 pi spacing n sin(theta)} (isotropic elements).
Complex array_factor(const ArrayConfig& cfg, int h, double theta_deg);

// Samples array_factor on the grid (strictly increasing, within [-90, 90]).
PatternCut pattern_cut(const ArrayConfig& cfg, int h, const Eigen::ArrayXd& theta_grid_deg);

// (order, power_db) rows with the -1st order at 0 dB; suppressed orders land
// on the -240 dB floor.
std::vector<std::pair<int, double>> power_spectrum_at(const ArrayConfig& cfg, double theta_deg,
                                                      int h_min, int h_max);

// Peak location, first-sidelobe level and -3 dB beamwidth of a cut. The main
// lobe is delimited by the local minima (or -20 dB crossings) adjacent to the
// peak; crossings are linearly interpolated. Throws "degenerate-pattern" when
// the cut has no lobe structure (e.g. a single element).
BeamMetrics beam_metrics(const PatternCut& cut);

}  // namespace tma
