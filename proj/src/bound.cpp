#include "cltbound/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cltbound/constants.hpp"
#include "cltbound/ranges.hpp"

namespace cltbound {
namespace {

constexpr double c = kTailExponent;

// exp{t^2 (tau(1 - tau) + 2(c - b)/b^2)}, shared by most center-bound terms.
double shared_exponential(const BoundParams& p) {
    const double t = p.t();
    const double tau = p.tau();
    const double b = p.b();
    return std::exp(t * t * (tau * (1.0 - tau) + 2.0 * (c - b) / (b * b)));
}

Condition at_most(double lhs, double rhs) {
    const double margin = rhs - lhs;
    return {lhs <= rhs, std::isnan(margin) ? -std::numeric_limits<double>::infinity() : margin};
}

bool all_finite(const CenterQuantities& q) {
    auto ok = [](double v) { return std::isfinite(v); };
    return ok(q.gamma) && ok(q.beta_hi) && ok(q.mu_hi) && ok(q.m2_lo) && ok(q.m2_hi) &&
           ok(q.delta2_lo) && ok(q.big_delta) && ok(q.eta) && std::all_of(q.alpha.begin(), q.alpha.end(), ok);
}

}  // namespace

BoundParams::BoundParams(double t, double tau, double b) : t_(t), tau_(tau), b_(b) {
    if (!std::isfinite(t) || t < kMinCoordinate) {
        throw std::invalid_argument("t must be ≥ 3.18, got " + std::to_string(t));
    }
    if (!(tau > 0.0 && tau < 1.0)) {
        throw std::invalid_argument("tau must lie in (0, 1), got " + std::to_string(tau));
    }
    if (!(b > c) || !std::isfinite(b)) {
        throw std::invalid_argument("b must exceed c = 1, got " + std::to_string(b));
    }
}

bool FeasibilityReport::feasible() const {
    for (const auto& [name, cond] : entries()) {
        if (!cond->satisfied) return false;
    }
    return true;
}

std::array<FeasibilityReport::Entry, 8> FeasibilityReport::entries() const {
    return {{{"range_tau", &range_tau},
             {"range_b", &range_b},
             {"cond_term7", &cond_term7},
             {"cond_21", &cond_21},
             {"cond_22", &cond_22},
             {"cond_form4", &cond_form4},
             {"cond_form4abc", &cond_form4abc},
             {"positivity_guard", &positivity_guard}}};
}

double gamma_budget(const BoundParams& p) {
    const double ratio = p.t() / p.b();
    return c * ratio * ratio * ratio * std::exp(2.0 * (c - p.b()) * ratio * ratio);
}

CenterQuantities center_quantities(const BoundParams& p) {
    const double t = p.t();
    const double tau = p.tau();
    const double b = p.b();
    const double b3 = b * b * b;
    const double t2 = t * t;
    const double shared = shared_exponential(p);

    CenterQuantities q;
    q.gamma = gamma_budget(p);
    q.beta_hi =
        1.0 + q.gamma * q.gamma * ((1.0 - tau) * (1.0 - tau) * t2 / 2.0 + c * shared / (tau * tau * tau * b3));
    q.mu_hi = t * q.gamma * (1.0 - tau + c * shared / (tau * tau * b3));
    q.m2_lo = 1.0 - (q.gamma / t) * (1.0 / tau + (1.0 - tau) * t2);
    // gamma * exp{tau(1 - tau) t^2} == c (t/b)^3 * shared; this form stays
    // finite when the factors would overflow separately.
    const double ratio = t / b;
    q.m2_hi = 1.0 + c * ratio * ratio * ratio * shared / (t * tau);
    q.delta2_lo = 1.0 + q.m2_lo - q.beta_hi - q.mu_hi * q.mu_hi;

    const double damping = std::exp(-0.5 * (1.0 - tau) * (1.0 - tau) * t2);
    for (int k = 0; k < 4; ++k) {
        q.alpha[k] = std::pow(t, 3 - k) * std::pow(tau, -k) * damping;
    }
    q.big_delta = std::exp(c / (tau * tau * tau * b3) * shared);
    const double root_m2 = std::sqrt(q.m2_hi);
    q.eta = q.mu_hi * root_m2 * (3.0 * root_m2 + q.mu_hi * std::sqrt(q.beta_hi));
    return q;
}

FeasibilityReport check_feasibility(const BoundParams& p, const CenterQuantities& q) {
    const double t = p.t();
    const double tau = p.tau();
    const double b = p.b();
    const double b3 = b * b * b;
    const double t2 = t * t;
    const double tau3 = tau * tau * tau;
    const double one_m = 1.0 - tau;
    const double shared = shared_exponential(p);
    const double edge = std::exp(2.0 * (c - b) * t2 / (b * b));
    const double sh = tau * one_m * t2;

    FeasibilityReport r;

    const double tau_lo = tau_lower(t, b);
    const double tau_hi = tau_upper(t);
    r.range_tau = {tau_lo <= tau && tau <= tau_hi, std::min(tau - tau_lo, tau_hi - tau)};
    const double b_lo = b_lower(t);
    const double b_hi = b_upper();
    r.range_b = {b_lo <= b && b <= b_hi, std::min(b - b_lo, b_hi - b)};

    r.cond_term7 = at_most(c * edge * (t2 + 2.0 * c * shared / (b3 * tau3 * one_m * one_m)), b3 * tau / 3.0);
    r.cond_21 = at_most(5.0 * c * shared, tau3 * one_m * one_m * b3 * t2);
    r.cond_22 = at_most(one_m * one_m * tau3 * std::pow(t, 5) * std::exp(-sh), 2.0);

    r.cond_form4 = at_most(q.beta_hi - 1.0 + q.mu_hi * q.mu_hi +
                               c * t2 / b3 * edge * (1.0 / tau + t2 * one_m),
                           0.75);

    const double drift = one_m + c * shared / (b3 * tau * tau);
    const double lhs_abc =
        tau * t * q.gamma * (0.5 * t2 * one_m * one_m + c * shared / (b3 * tau3) + t2 * drift * drift);
    r.cond_form4abc = at_most(lhs_abc, 0.5 * std::exp(sh) - 1.0 - sh);

    const double spread = q.m2_lo - q.beta_hi * q.mu_hi * q.mu_hi;
    const double guard_margin = std::min(spread, q.delta2_lo - 0.25);
    const bool finite = all_finite(q);
    r.positivity_guard = {finite && spread > 0.0 && q.delta2_lo >= 0.25,
                          finite ? guard_margin : -std::numeric_limits<double>::infinity()};
    return r;
}

double tail_bound(double b) { return b * b * b * kOnePlusE; }

double nagaev_bound(double t) { return kNonuniformConstant / (1.0 + t * t * t); }

BoundResult evaluate_formulas(const BoundParams& p, const CenterQuantities& q) {
    const double t = p.t();
    const double tau = p.tau();
    const double t2 = t * t;
    const auto& a = q.alpha;

    const double delta = std::sqrt(q.delta2_lo);
    const double mixing =
        a[2] + 0.25 * a[1] * t * (std::exp(-0.5 * t2) + std::exp(-0.5 * delta * delta * t2));
    const double spread = q.m2_lo - q.beta_hi * q.mu_hi * q.mu_hi;
    const double lattice = kCenterFactor * std::sqrt(q.beta_hi / (spread * spread * spread)) *
                           (a[0] + q.eta * t2 * t * std::exp(-0.5 * t2 * (1.0 - tau * tau)));

    BoundResult r;
    r.b_tail = tail_bound(p.b());
    r.b_center = 1.0 / (tau * tau * tau) + a[3] * q.big_delta +
                 std::sqrt(2.0 / std::numbers::pi) * mixing + lattice;
    r.c_value = std::max(r.b_tail, r.b_center);
    r.nonuniform_at_t = r.c_value / (t2 * t);
    r.nagaev_at_t = nagaev_bound(t);
    r.uniform_ref = kUniformConstant;
    return r;
}

std::variant<BoundResult, FeasibilityReport> compute_bounds(const BoundParams& p,
                                                            const CenterQuantities& q) {
    FeasibilityReport report = check_feasibility(p, q);
    if (!report.feasible()) return report;
    BoundResult r = evaluate_formulas(p, q);
    if (!std::isfinite(r.b_center)) {
        report.positivity_guard = {false, -std::numeric_limits<double>::infinity()};
        return report;
    }
    return r;
}

Evaluation evaluate(const BoundParams& p) {
    CenterQuantities q = center_quantities(p);
    FeasibilityReport report = check_feasibility(p, q);
    BoundResult formulas = evaluate_formulas(p, q);
    if (!std::isfinite(formulas.b_center)) {
        report.positivity_guard = {false, -std::numeric_limits<double>::infinity()};
    }
    std::optional<BoundResult> result;
    if (report.feasible()) result = formulas;
    return {p, q, report, formulas, result};
}

}  // namespace cltbound
