#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "../support/random_laws.hpp"
#include "cltbound/truncation.hpp"

using namespace cltbound;

TEST_CASE("moment_envelope at s = 0 drops the tilt corrections") {
    const auto env = moment_envelope({0.0, 1.0, 1.0});
    CHECK(env.beta_hi == 1.0);
    CHECK(env.m2_hi == 2.0);
    CHECK(env.m3_hi == 1.0);
    CHECK(env.m1_hi == 1.0);
    CHECK(env.ey_lo == -1.0);
    CHECK(env.ey3_lo == -1.0);
}

TEST_CASE("moment_envelope for an untruncated centered variable") {
    const auto env = moment_envelope({0.0, 1e6, 1.0});
    CHECK(env.m1_hi == doctest::Approx(1e-12).epsilon(1e-9));
    CHECK(env.ey_lo == doctest::Approx(-1e-12).epsilon(1e-9));
    CHECK(env.ey2_lo == doctest::Approx(1.0 - 1e-6));
}

TEST_CASE("moment_envelope closed forms at (s, h, rho) = (0.5, 2, 1.5)") {
    const auto env = moment_envelope({0.5, 2.0, 1.5});
    // mpmath, 50 digits (tests/oracles/frozen_values.py)
    CHECK(env.beta_hi == doctest::Approx(1.4471778428360709816).epsilon(1e-15));
    CHECK(env.m1_hi == doctest::Approx(1.5193556856721419633).epsilon(1e-15));
    CHECK(env.m1_lo == doctest::Approx(-0.4375).epsilon(1e-15));
    CHECK(env.m3_hi == doctest::Approx(1.5 * std::numbers::e).epsilon(1e-15));

    // Two-point law with rho = 1.5 and no truncation at h = 2 lies inside.
    const double p = 0.2;
    const std::vector<Atom> law{{-std::sqrt((1 - p) / p), p}, {std::sqrt(p / (1 - p)), 1 - p}};
    const auto m = testing::truncated_moments(law, 0.5, 2.0);
    const auto own = moment_envelope({0.5, 2.0, m.rho});
    CHECK(m.beta <= own.beta_hi);
    CHECK(m.m1 <= own.m1_hi);
    CHECK(m.m2 <= own.m2_hi);
}

TEST_CASE("moment_envelope rejects out-of-domain inputs") {
    CHECK_THROWS_AS(moment_envelope({-0.1, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(moment_envelope({0.1, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(moment_envelope({0.1, 1.0, 0.999}), std::invalid_argument);
    CHECK_THROWS_AS(moment_envelope({NAN, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("envelope dominates exact truncated moments of random laws") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> tilt(0.0, 3.0);
    std::uniform_real_distribution<double> level(0.5, 10.0);
    for (int i = 0; i < 500; ++i) {
        const auto atoms = testing::random_standardized_atoms(rng);
        const double s = tilt(rng);
        const double h = level(rng);
        const auto m = testing::truncated_moments(atoms, s, h);
        const auto env = moment_envelope({s, h, std::max(1.0, m.rho)});
        CAPTURE(i);
        CAPTURE(s);
        CAPTURE(h);
        const double slack = 1e-12;
        CHECK(m.beta <= env.beta_hi * (1 + slack));
        CHECK(m.m1 <= env.m1_hi * (1 + slack));
        CHECK(m.m1 >= env.m1_lo - slack);
        CHECK(m.m2 <= env.m2_hi * (1 + slack));
        CHECK(m.m2 >= env.m2_lo - slack);
        CHECK(m.m3_abs <= env.m3_hi * (1 + slack));
        CHECK(m.m1_abs <= env.abs_m1_hi * (1 + slack));
        CHECK(m.ey >= env.ey_lo - slack);
        CHECK(m.ey2 >= env.ey2_lo - slack);
        CHECK(m.ey3 >= env.ey3_lo - slack);
        CHECK(env.abs_m1_hi * env.abs_m1_hi == doctest::Approx(env.beta_hi * env.m2_hi).epsilon(1e-14));
        CHECK(env.beta_hi >= 1.0);
        CHECK(env.m2_hi >= 1.0);
    }
}

TEST_CASE("upper envelope components are non-decreasing in s") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> level(0.5, 10.0);
    std::uniform_real_distribution<double> moment(1.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double h = level(rng);
        const double rho = moment(rng);
        MomentEnvelope prev = moment_envelope({0.0, h, rho});
        for (double s = 0.05; s <= 3.0; s += 0.05) {
            const MomentEnvelope cur = moment_envelope({s, h, rho});
            CHECK(cur.beta_hi >= prev.beta_hi);
            CHECK(cur.m1_hi >= prev.m1_hi);
            CHECK(cur.m2_hi >= prev.m2_hi);
            CHECK(cur.m3_hi >= prev.m3_hi);
            CHECK(cur.abs_m1_hi >= prev.abs_m1_hi);
            prev = cur;
        }
    }
}

TEST_CASE("psi_split") {
    SUBCASE("log term equal to one leaves b^2 / (2(b - c))") {
        const double a = 2.0, rho = 1.0;
        const double t = std::cbrt(rho * a * std::numbers::e);
        CHECK(psi_split(1, t, a, 1.5, 1.0, rho) == doctest::Approx(1.5 * 1.5 / 1.0).epsilon(1e-14));
    }
    SUBCASE("b = 2, c = 1, log argument e^2") {
        const double a = 1.0;
        const double t = std::cbrt(std::exp(2.0));
        CHECK(psi_split(1, t, a, 2.0, 1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    }
    SUBCASE("n = 100, t = 5, a = b^3, b = 1.6269") {
        const double b = 1.6269;
        CHECK(psi_split(100, 5.0, b * b * b, b, 1.0, 1.0) ==
              doctest::Approx(11.971349895414576683).epsilon(1e-14));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(psi_split(1, 5.0, 1.0, 1.0, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(psi_split(1, 5.0, 1.0, 0.9, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(psi_split(1, 1.01, 10.0, 2.0, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(psi_split(0, 5.0, 1.0, 2.0, 1.0, 1.0), std::invalid_argument);
    }
}
