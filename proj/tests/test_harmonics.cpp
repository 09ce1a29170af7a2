#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "tma/harmonics.hpp"
#include "tma/nonideal.hpp"

#include <cmath>
#include <numbers>

using namespace tma;
using tma_test::cdist;
using tma_test::uniform;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoSqrt2OverPi = 0.9003163161571062;  // 2*sqrt(2)/pi

// Test-side oracle: plain midpoint Riemann sum of the defining integral over
// one rectangular pulse, period 1. Kept independent of the library path.
Complex riemann_pulse(double start, double tau, Complex state, int h, int n) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        const double u = start + (i + 0.5) * tau / n;
        acc += std::polar(1.0, -2.0 * kPi * h * u);
    }
    return state * acc * (tau / n);
}

ModulationSchedule ideal_quarter() { return build_ssb_schedule_fractions(1.0, 0.25, 0.25); }

}  // namespace

TEST_CASE("pulse_coefficient matches the defining integral") {
    // DC of a quarter-duty unit pulse
    CHECK(cdist(pulse_coefficient(0.0, 0.25, 1.0, {1.0, 0.0}, 0), Complex(0.25, 0.0)) < 1e-15);
    // sinc null at h = 4
    CHECK(std::abs(pulse_coefficient(0.0, 0.25, 1.0, {1.0, 0.0}, 4)) < 1e-15);
    // h = 1: 0.2250790790392765 * e^{-j pi/4} = (1 - j) / (2 pi), frozen from
    // the Riemann oracle below
    const Complex expected(0.15915494309189535, -0.15915494309189535);
    const Complex got = pulse_coefficient(0.0, 0.25, 1.0, {1.0, 0.0}, 1);
    CHECK(cdist(got, expected) < 1e-14);
    CHECK(std::abs(got) == doctest::Approx(0.2250790790392765).epsilon(1e-13));
    CHECK(cdist(riemann_pulse(0.0, 0.25, {1.0, 0.0}, 1, 1000000), expected) < 1e-6);

    // a few random pulses against the oracle
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const double start = uniform(rng, 0.0, 1.0);
        const double tau = uniform(rng, 0.05, 0.9);
        const Complex state = std::polar(1.0, uniform(rng, -kPi, kPi));
        const int h = static_cast<int>(uniform(rng, -8.0, 8.0));
        CHECK(cdist(pulse_coefficient(start, tau, 1.0, state, h),
                    riemann_pulse(start, tau, state, h, 200000)) < 1e-5);
    }
}

TEST_CASE("pulse_coefficient rejects bad duty") {
    CHECK_THROWS_WITH_AS(pulse_coefficient(0.0, 0.0, 1.0, {1.0, 0.0}, 1),
                         doctest::Contains("invalid-duty"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(pulse_coefficient(0.0, 1.5, 1.0, {1.0, 0.0}, 1),
                         doctest::Contains("invalid-duty"), std::invalid_argument);
}

TEST_CASE("ideal SSB spectrum: carrier suppressed, power in the -1st order") {
    const auto spec = spectrum_analytic(ideal_quarter(), -6, 6);
    CHECK(std::abs(spec.at(0)) < 1e-15);
    CHECK(std::abs(spec.at(-1)) == doctest::Approx(kTwoSqrt2OverPi).epsilon(1e-13));
    CHECK(std::abs(spec.at(3)) == doctest::Approx(kTwoSqrt2OverPi / 3.0).epsilon(1e-13));
}

TEST_CASE("spectrum_analytic rejects overlapping windows") {
    auto bad = ideal_quarter();
    bad.on_fraction = 0.3;
    CHECK_THROWS_AS(spectrum_analytic(bad, -2, 2), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_analytic(bad, 2, -2), std::invalid_argument);
}

TEST_CASE("closed form equals the four-pulse sum at machine precision") {
    CHECK(coefficient_closed_form(0, 0.25, 0.25, 1.0) == Complex(0.0, 0.0));
    CHECK(coefficient_closed_form(2, 0.13, 0.2, 1.0) == Complex(0.0, 0.0));
    CHECK(std::abs(coefficient_closed_form(-1, 0.25, 0.25, 1.0)) ==
          doctest::Approx(kTwoSqrt2OverPi).epsilon(1e-13));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const double tau = uniform(rng, 1e-3, 0.25);
        const double t1 = uniform(rng, 0.0, 1.0);
        const auto s = build_ssb_schedule_fractions(1.0, tau, t1);
        const auto spec = spectrum_analytic(s, -21, 21);
        for (int h = -21; h <= 21; ++h)
            CHECK(cdist(coefficient_closed_form(h, t1, tau, 1.0), spec.at(h)) < 1e-12);
    }
}

TEST_CASE("fast range oracle reproduces the plain Riemann sum") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        const double tau = uniform(rng, 0.03, 0.25);
        const double t1 = uniform(rng, 0.0, 1.0);
        const auto s = build_ssb_schedule_fractions(1.0, tau, t1);
        const auto fast = spectrum_numeric_oracle_range(s, -7, 7, 100000);
        for (int h = -7; h <= 7; ++h)
            CHECK(cdist(fast[h + 7], spectrum_numeric_oracle(s, h, 100000)) < 1e-10);
    }
}

TEST_CASE("numeric oracle agrees with the analytic spectrum") {
    const auto ideal = ideal_quarter();
    const auto spec = spectrum_analytic(ideal, -1, 0);
    CHECK(cdist(spectrum_numeric_oracle(ideal, -1, 1000000), spec.at(-1)) < 1e-4);
    CHECK(std::abs(spectrum_numeric_oracle(ideal, 0, 1000000)) < 1e-4);

    // perturbed states and random timing, the full working order range
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const double tau = uniform(rng, 0.02, 0.25);
        auto s = build_ssb_schedule_fractions(1.0, tau, uniform(rng, 0.0, 1.0));
        Eigen::Array4d errors;
        for (int k = 0; k < 4; ++k) errors[k] = uniform(rng, -10.0, 10.0);
        s = apply_phase_errors(s, errors);

        const auto analytic = spectrum_analytic(s, -20, 20);
        const auto oracle = spectrum_numeric_oracle_range(s, -20, 20, 1000000);
        for (int h = -20; h <= 20; ++h)
            CHECK(cdist(analytic.at(h), oracle[h + 20]) < 1e-4);
    }
}

TEST_CASE("oracle of an all-zero schedule is exactly zero") {
    auto s = ideal_quarter();
    s.phase_states.setZero();
    CHECK(spectrum_numeric_oracle(s, 3, 10000) == Complex(0.0, 0.0));
}

TEST_CASE("is_suppressed: even orders and 4k+1 go, 4k+3 stay") {
    CHECK(is_suppressed(0));
    CHECK(is_suppressed(2));
    CHECK(is_suppressed(-2));
    CHECK(is_suppressed(1));
    CHECK(is_suppressed(5));
    CHECK(is_suppressed(-3));
    CHECK(!is_suppressed(-1));
    CHECK(!is_suppressed(3));
    CHECK(!is_suppressed(-5));
    CHECK(!is_suppressed(7));
}

TEST_CASE("suppression and surviving magnitudes for the ideal schedule") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const double tau = uniform(rng, 0.05, 0.25);
        const auto spec =
            spectrum_analytic(build_ssb_schedule_fractions(1.0, tau, uniform(rng, 0.0, 1.0)),
                              -21, 21);
        for (int h = -21; h <= 21; ++h)
            if (is_suppressed(h)) CHECK(std::abs(spec.at(h)) < 1e-12);
    }

    // at quarter duty every surviving order has |A_h| = 2 sqrt(2) / (|h| pi)
    const auto spec = spectrum_analytic(ideal_quarter(), -21, 21);
    for (int h = -21; h <= 21; ++h) {
        if (is_suppressed(h)) continue;
        CHECK(std::abs(std::abs(spec.at(h)) - kTwoSqrt2OverPi / std::abs(h)) < 1e-12);
    }
}

TEST_CASE("insertion loss") {
    CHECK(std::abs(insertion_loss_db(0.25, 1.0) - (-0.91)) < 0.005);
    // tau = T/8, frozen from direct evaluation and pinned to the spectrum below
    CHECK(insertion_loss_db(0.125, 1.0) == doctest::Approx(-6.245004415661778).epsilon(1e-12));

    const auto spec = spectrum_analytic(build_ssb_schedule_fractions(1.0, 0.125, 0.25), -1, -1);
    CHECK(insertion_loss_db(0.125, 1.0) ==
          doctest::Approx(20.0 * std::log10(std::abs(spec.at(-1)))).epsilon(1e-12));

    CHECK(std::isinf(insertion_loss_db(1e-13, 1.0)));
    CHECK(insertion_loss_db(1e-13, 1.0) < 0.0);
    CHECK_THROWS_WITH_AS(insertion_loss_db(0.3, 1.0), doctest::Contains("invalid-duty"),
                         std::invalid_argument);
}

TEST_CASE("total power and Parseval") {
    CHECK(total_power(ideal_quarter()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(total_power(build_ssb_schedule_fractions(1.0, 0.125, 0.0)) ==
          doctest::Approx(0.5).epsilon(1e-15));

    for (const double tau : {0.25, 0.125}) {
        const auto s = build_ssb_schedule_fractions(1.0, tau, 0.37);
        const auto spec = spectrum_analytic(s, -2001, 2001);
        double acc = 0.0;
        double previous = 0.0;
        for (int H = 0; H <= 2001; ++H) {
            if (H == 0)
                acc += std::norm(spec.at(0));
            else
                acc += std::norm(spec.at(H)) + std::norm(spec.at(-H));
            CHECK(acc >= previous);  // partial sums are monotone
            previous = acc;
        }
        CHECK(std::abs(acc - total_power(s)) < 1e-3 * total_power(s));
    }
}

TEST_CASE("time shift multiplies each coefficient by the matching phase") {
    std::mt19937_64 rng(59);
    const auto s = build_ssb_schedule_fractions(1.0, 0.2, 0.11);
    const auto base = spectrum_analytic(s, -10, 10);
    for (int trial = 0; trial < 20; ++trial) {
        const double delta = uniform(rng, -2.0, 2.0);
        const auto shifted = spectrum_analytic(shift_schedule(s, delta), -10, 10);
        for (int h = -10; h <= 10; ++h) {
            const Complex expected = base.at(h) * std::polar(1.0, -2.0 * kPi * h * delta);
            CHECK(cdist(shifted.at(h), expected) < 1e-12);
        }
    }
}

TEST_CASE("coefficients depend only on fractions of the period") {
    const auto slow = spectrum_analytic(build_ssb_schedule(1.0, 0.25, 0.3), -9, 9);
    const auto fast = spectrum_analytic(build_ssb_schedule(1e-6, 0.25e-6, 0.3e-6), -9, 9);
    for (int h = -9; h <= 9; ++h) CHECK(cdist(slow.at(h), fast.at(h)) < 1e-12);
}

TEST_CASE("spectrum lookup outside the computed range throws") {
    const auto spec = spectrum_analytic(ideal_quarter(), -3, 3);
    CHECK(spec.contains(3));
    CHECK(!spec.contains(4));
    CHECK_THROWS_WITH_AS(spec.at(4), doctest::Contains("missing-order"), std::out_of_range);
}
