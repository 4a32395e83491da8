#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <tuple>
#include <numbers>
#include <stdexcept>
#include <variant>

#include "cltbound/bound.hpp"
#include "cltbound/constants.hpp"

using namespace cltbound;

namespace {

BoundResult checked(double t, double tau, double b) {
    const BoundParams p(t, tau, b);
    const auto out = compute_bounds(p, center_quantities(p));
    REQUIRE(std::holds_alternative<BoundResult>(out));
    return std::get<BoundResult>(out);
}

}  // namespace

TEST_CASE("BoundParams validates its invariants") {
    CHECK_THROWS_AS(BoundParams(3.0, 0.45, 1.9), std::invalid_argument);
    CHECK_THROWS_AS(BoundParams(3.2, 0.0, 1.9), std::invalid_argument);
    CHECK_THROWS_AS(BoundParams(3.2, 1.0, 1.9), std::invalid_argument);
    CHECK_THROWS_AS(BoundParams(3.2, 0.4, 1.0), std::invalid_argument);
    CHECK_NOTHROW(BoundParams(3.18, 0.45, 1.9));
}

TEST_CASE("gamma_budget") {
    // mpmath references
    CHECK(gamma_budget({3.2, 0.4587, 1.9650}) == doctest::Approx(0.025851156204488912908).epsilon(1e-14));
    CHECK(gamma_budget({10.0, 0.6298, 1.1555}) == doctest::Approx(4.9634515531112664886e-8).epsilon(1e-12));
    // exponent vanishes as b -> c
    CHECK(gamma_budget({10.0, 0.5, 1.0 + 1e-9}) == doctest::Approx(999.999797000021006).epsilon(1e-12));
}

TEST_CASE("center_quantities at the t = 3.20 table row") {
    const auto q = center_quantities({3.2, 0.4587, 1.9650});
    CHECK(q.beta_hi == doctest::Approx(1.0010719901965425965).epsilon(1e-14));
    CHECK(q.mu_hi == doctest::Approx(0.048721194382433733768).epsilon(1e-13));
    CHECK(q.m2_lo == doctest::Approx(0.93760996230675970222).epsilon(1e-14));
    CHECK(q.m2_hi == doctest::Approx(1.2238770751054315049).epsilon(1e-14));
    CHECK(q.delta2_lo == doctest::Approx(0.93416421732816621334).epsilon(1e-14));
    CHECK(q.big_delta == doctest::Approx(1.1094992262902464668).epsilon(1e-14));
    CHECK(q.eta == doctest::Approx(0.18151372646108680204).epsilon(1e-13));

    CHECK(q.gamma > 0.0);
    CHECK(q.m2_lo <= 1.0);
    CHECK(q.m2_hi >= 1.0);
    CHECK(q.delta2_lo <= 1.0 + q.m2_hi);
}

TEST_CASE("alpha coefficients") {
    SUBCASE("tau -> 1 gives alpha_0 -> t^3") {
        const auto q = center_quantities({4.0, 1.0 - 1e-12, 1.5});
        CHECK(q.alpha[0] == doctest::Approx(64.0).epsilon(1e-9));
    }
    SUBCASE("alpha_3 / alpha_0 = (t tau)^-3") {
        for (double t : {3.2, 5.0, 17.0}) {
            for (double tau : {0.2, 0.45, 0.8}) {
                const auto q = center_quantities({t, tau, 1.4});
                CHECK(q.alpha[3] / q.alpha[0] == doctest::Approx(std::pow(t * tau, -3)).epsilon(1e-13));
                for (double a : q.alpha) CHECK(a > 0.0);
            }
        }
    }
}

TEST_CASE("check_feasibility") {
    SUBCASE("published t = 3.20 row passes every condition") {
        const BoundParams p(3.2, 0.4587, 1.9650);
        const auto r = check_feasibility(p, center_quantities(p));
        for (const auto& [name, cond] : r.entries()) {
            CAPTURE(name);
            CHECK(cond->satisfied);
            CHECK(cond->margin >= 0.0);
        }
        CHECK(r.feasible());
        // left side of the r^2 <= 2 eps sqrt(n) condition
        CHECK(2.0 - r.cond_22.margin == doctest::Approx(0.74645528161187550695).epsilon(1e-13));
    }
    SUBCASE("tau above the step-2 cap") {
        const BoundParams p(3.2, 0.99, 1.9650);
        const auto r = check_feasibility(p, center_quantities(p));
        CHECK_FALSE(r.range_tau.satisfied);
        CHECK(r.range_tau.margin == doctest::Approx(0.45873412263472584577 - 0.99).epsilon(1e-12));
        CHECK_FALSE(r.feasible());
    }
    SUBCASE("tau = 0.46 just above the cap at t = 3.2") {
        const BoundParams p(3.2, 0.46, 1.9650);
        const auto r = check_feasibility(p, center_quantities(p));
        CHECK_FALSE(r.range_tau.satisfied);
        CHECK(std::holds_alternative<FeasibilityReport>(compute_bounds(p, center_quantities(p))));
    }
    SUBCASE("b above cbrt(30 / (1 + e))") {
        const BoundParams p(3.2, 0.45, 2.01);
        const auto r = check_feasibility(p, center_quantities(p));
        CHECK_FALSE(r.range_b.satisfied);
    }
    SUBCASE("margins are signed rhs - lhs with zero slack") {
        const BoundParams p(5.0, 0.4556, 1.6269);
        const auto r = check_feasibility(p, center_quantities(p));
        for (const auto& [name, cond] : r.entries()) {
            CAPTURE(name);
            CHECK(cond->satisfied == (cond->margin >= 0.0));
        }
    }
}

TEST_CASE("compute_bounds reproduces published anchors") {
    SUBCASE("t = 3.20, center branch active") {
        const auto r = checked(3.2, 0.4587, 1.9650);
        CHECK(std::abs(r.c_value - 28.2363) <= 5e-4);
        CHECK(r.b_center > r.b_tail);
        CHECK(r.b_tail == doctest::Approx(28.211746209825341685).epsilon(1e-14));
        CHECK(r.b_center == doctest::Approx(28.236341416129337993).epsilon(1e-13));
    }
    SUBCASE("t = 5.00") {
        const auto r = checked(5.0, 0.4556, 1.6269);
        CHECK(std::abs(r.c_value - 16.0240) <= 5e-4);
        CHECK(r.nonuniform_at_t == doctest::Approx(r.c_value / 125.0).epsilon(1e-15));
        CHECK(std::abs(r.nonuniform_at_t - 0.12819173) <= 5e-6);
    }
    SUBCASE("t = 100.00 sits in the tail branch") {
        const BoundParams p(100.0, 0.9477, 1.0263);
        const auto r = evaluate_formulas(p, center_quantities(p));
        CHECK(r.c_value == r.b_tail);
        CHECK(r.b_tail == doctest::Approx(1.0263 * 1.0263 * 1.0263 * kOnePlusE));
    }
}

TEST_CASE("BoundResult invariants") {
    for (auto [t, tau, b] : {std::tuple{3.2, 0.4587, 1.9650}, {3.3, 0.4551, 1.9467}, {4.0, 0.44, 1.8137},
                             {6.0, 0.4843, 1.4696}, {8.0, 0.5475, 1.2486}}) {
        const auto r = checked(t, tau, b);
        CHECK(r.c_value == std::max(r.b_tail, r.b_center));
        CHECK(r.b_tail == b * b * b * kOnePlusE);
        CHECK(r.nonuniform_at_t * t * t * t == doctest::Approx(r.c_value).epsilon(1e-15));
        CHECK(r.nagaev_at_t == kNonuniformConstant / (1.0 + t * t * t));
        CHECK(r.uniform_ref == kUniformConstant);
        CHECK(r.b_center > 1.0 / (tau * tau * tau));
        CHECK(r.b_tail > kOnePlusE);
    }
}

TEST_CASE("tail bound limit and column identities") {
    CHECK(tail_bound(1.0) == doctest::Approx(1.0 + std::numbers::e).epsilon(1e-15));
    CHECK(std::abs(tail_bound(1.0) - 3.7183) < 5e-5);
    CHECK(std::abs(27.4681 / (3.3 * 3.3 * 3.3) - 0.7643403) < 5e-6);
    CHECK(nagaev_bound(5.0) == doctest::Approx(29.1174 / 126.0).epsilon(1e-15));
}

TEST_CASE("evaluation is deterministic") {
    const auto a = evaluate({4.4, 0.4434, 1.7359});
    const auto b = evaluate({4.4, 0.4434, 1.7359});
    REQUIRE(a.result);
    REQUIRE(b.result);
    CHECK(std::memcmp(&*a.result, &*b.result, sizeof(BoundResult)) == 0);
}

TEST_CASE("evaluate keeps formulas for infeasible candidates") {
    const auto ev = evaluate({10.0, 0.6298, 1.1555});
    CHECK_FALSE(ev.result.has_value());
    CHECK_FALSE(ev.feasibility.range_tau.satisfied);
    CHECK(std::abs(ev.formulas.c_value - 5.7370) < 1e-3);
}

TEST_CASE("large t stays finite") {
    const auto ev = evaluate({1000.0, 0.99, 1.01});
    CHECK(std::isfinite(ev.quantities.m2_hi));
    CHECK(std::isfinite(ev.formulas.c_value));
}
