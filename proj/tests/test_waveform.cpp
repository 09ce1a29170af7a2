#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "tma/waveform.hpp"

#include <cmath>

using namespace tma;
using tma_test::cdist;
using tma_test::uniform;

namespace {

bool has_violation(const std::vector<ScheduleViolation>& v, const std::string& invariant) {
    for (const auto& x : v)
        if (x.invariant == invariant) return true;
    return false;
}

}  // namespace

TEST_CASE("build_ssb_schedule produces the staggered starts") {
    const double us = 1e-6;
    const auto s = build_ssb_schedule(1.0 * us, 0.25 * us, 0.25 * us);
    const Eigen::Array4d starts = s.window_starts_s();
    CHECK(starts[0] == doctest::Approx(0.25 * us).epsilon(1e-12));
    CHECK(starts[1] == doctest::Approx(0.0).scale(us).epsilon(1e-12));
    CHECK(starts[2] == doctest::Approx(0.75 * us).epsilon(1e-12));
    CHECK(starts[3] == doctest::Approx(0.5 * us).epsilon(1e-12));
    CHECK(s.mod_freq_hz() == doctest::Approx(1e6));
    CHECK(validate_schedule(s).empty());
}

TEST_CASE("build_ssb_schedule wraps t2 across the period") {
    const auto s = build_ssb_schedule(1e-6, 0.25e-6, 0.0);
    CHECK(s.start_fractions[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(validate_schedule(s).empty());
}

TEST_CASE("build_ssb_schedule rejects bad inputs") {
    CHECK_THROWS_WITH_AS(build_ssb_schedule(1e-6, 0.3e-6, 0.0),
                         doctest::Contains("invalid-duty"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_ssb_schedule(1e-6, 0.0, 0.0), doctest::Contains("invalid-duty"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_ssb_schedule(-1e-6, 0.1e-6, 0.0),
                         doctest::Contains("invalid-period"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_ssb_schedule(0.0, 0.1e-6, 0.0),
                         doctest::Contains("invalid-period"), std::invalid_argument);
}

TEST_CASE("evaluate_waveform picks the right state") {
    const double us = 1e-6;
    const auto s = build_ssb_schedule(1.0 * us, 0.25 * us, 0.25 * us);
    CHECK(cdist(evaluate_waveform(s, 0.1 * us), Complex(0.0, 1.0)) < 1e-15);
    CHECK(cdist(evaluate_waveform(s, 0.3 * us), Complex(1.0, 0.0)) < 1e-15);
    CHECK(cdist(evaluate_waveform(s, 1.1 * us), Complex(0.0, 1.0)) < 1e-15);  // periodicity
    CHECK(cdist(evaluate_waveform(s, -0.9 * us), Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("state sequence at full duty is the descending 90-degree staircase") {
    // t2 = 0: over one period the states run (e^{j pi/2}, 1, e^{j 3pi/2}, -1)
    const auto s = build_ssb_schedule(1.0, 0.25, 0.25);
    CHECK(cdist(evaluate_waveform(s, 0.0), Complex(0.0, 1.0)) < 1e-15);
    CHECK(cdist(evaluate_waveform(s, 0.25), Complex(1.0, 0.0)) < 1e-15);
    CHECK(cdist(evaluate_waveform(s, 0.5), Complex(0.0, -1.0)) < 1e-15);
    CHECK(cdist(evaluate_waveform(s, 0.75), Complex(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("waveform magnitude is 0 or 1 and covers 4 tau of the period") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const double tau = uniform(rng, 0.01, 0.25);
        const double t1 = uniform(rng, 0.0, 1.0);
        const auto s = build_ssb_schedule_fractions(1.0, tau, t1);

        const int n = 100000;
        int on_count = 0;
        for (int i = 0; i < n; ++i) {
            const double mag = std::abs(evaluate_waveform_fraction(s, (i + 0.5) / n));
            if (mag > 0.5) {
                CHECK(mag == doctest::Approx(1.0).epsilon(1e-12));
                ++on_count;
            } else {
                CHECK(mag == 0.0);
            }
        }
        // each window's sample count is within 1 of tau*n
        CHECK(std::abs(on_count / double(n) - 4.0 * tau) <= 4.0 / n);
    }
}

TEST_CASE("full duty tiles the period with no gaps") {
    const auto s = build_ssb_schedule_fractions(1.0, 0.25, 0.37);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const double u = uniform(rng, -3.0, 3.0);
        CHECK(std::abs(evaluate_waveform_fraction(s, u)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("shift_schedule behaves like addition modulo the period") {
    const double us = 1e-6;
    const auto s = build_ssb_schedule(1.0 * us, 0.25 * us, 0.25 * us);

    const auto same = shift_schedule(s, 0.0);
    CHECK((same.start_fractions - s.start_fractions).abs().maxCoeff() == 0.0);

    const auto wrapped = shift_schedule(s, 1.0 * us);
    CHECK((wrapped.start_fractions - s.start_fractions).abs().maxCoeff() < 1e-12);

    const auto quarter = shift_schedule(s, 0.25 * us);
    Eigen::Array4d expected;
    expected << 0.5, 0.25, 0.0, 0.75;
    CHECK((quarter.start_fractions - expected).abs().maxCoeff() < 1e-12);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = uniform(rng, -2.0, 2.0) * us;
        const double b = uniform(rng, -2.0, 2.0) * us;
        const auto two_step = shift_schedule(shift_schedule(s, a), b);
        const auto one_step = shift_schedule(s, a + b);
        for (int k = 0; k < 4; ++k) {
            double d = std::abs(two_step.start_fractions[k] - one_step.start_fractions[k]);
            d = std::min(d, 1.0 - d);  // compare on the circle
            CHECK(d < 1e-12);
        }
        CHECK(validate_schedule(two_step).empty());
    }
}

TEST_CASE("validate_schedule flags broken invariants with names") {
    auto s = build_ssb_schedule(1e-6, 0.25e-6, 0.25e-6);
    CHECK(validate_schedule(s).empty());

    SUBCASE("ssb constraint") {
        auto bad = s;
        bad.start_fractions[2] = wrap_unit(bad.start_fractions[0] + 0.4);
        const auto v = validate_schedule(bad);
        CHECK(has_violation(v, "ssb-constraint"));
        CHECK(!has_violation(v, "overlap"));
    }
    SUBCASE("overlap at excess duty") {
        auto bad = s;
        bad.on_fraction = 0.3;
        const auto v = validate_schedule(bad);
        CHECK(has_violation(v, "overlap"));
        CHECK(has_violation(v, "duty"));
    }
    SUBCASE("non-unit state") {
        auto bad = s;
        bad.phase_states[2] *= 0.5;
        CHECK(has_violation(validate_schedule(bad), "unit-magnitude"));
    }
    SUBCASE("zero period") {
        ModulationSchedule bad;
        CHECK(has_violation(validate_schedule(bad), "period"));
    }
}
