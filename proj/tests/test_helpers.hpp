#pragma once

#include "tma/waveform.hpp"

#include <complex>
#include <random>

namespace tma_test {

// Cross-platform uniform [0,1) from the generator's high bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline double cdist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

}  // namespace tma_test
