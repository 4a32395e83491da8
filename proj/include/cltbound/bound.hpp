#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

namespace cltbound {

/// One candidate (t, tau, b) with c fixed to 1.
///
/// The truncation scales h = tau sqrt(n) t, s = (1 - tau) t / sqrt(n) and
/// r = (1 - tau) t are never formed: every formula below only needs the
/// n-free products sh = tau (1 - tau) t^2 and r^2 = (1 - tau)^2 t^2.
class BoundParams {
public:
    /// Throws std::invalid_argument unless t >= 3.18, 0 < tau < 1 and b > 1.
    BoundParams(double t, double tau, double b);

    double t() const { return t_; }
    double tau() const { return tau_; }
    double b() const { return b_; }

    friend bool operator==(const BoundParams&, const BoundParams&) = default;

private:
    double t_;
    double tau_;
    double b_;
};

/// Intermediate scalars of the center bound.
struct CenterQuantities {
    double gamma = 0.0;
    double beta_hi = 0.0;
    double mu_hi = 0.0;
    double m2_lo = 0.0;
    double m2_hi = 0.0;
    double delta2_lo = 0.0;
    std::array<double, 4> alpha{};
    double big_delta = 0.0;
    double eta = 0.0;
};

struct Condition {
    bool satisfied = false;
    double margin = 0.0;  // rhs - lhs; negative means violated
};

struct FeasibilityReport {
    Condition range_tau;
    Condition range_b;
    Condition cond_term7;     // beta <= 1 + rho s^2 h / 6, in t-form
    Condition cond_21;        // 5 eps <= r^2
    Condition cond_22;        // r^2 <= 2 eps sqrt(n)
    Condition cond_form4;     // delta^2 >= 0.25
    Condition cond_form4abc;  // delta^2 >= 1 - zeta/2
    Condition positivity_guard;

    bool feasible() const;

    using Entry = std::pair<std::string_view, const Condition*>;
    std::array<Entry, 8> entries() const;
};

struct BoundResult {
    double b_tail = 0.0;
    double b_center = 0.0;
    double c_value = 0.0;
    double nonuniform_at_t = 0.0;  // c_value / t^3
    double nagaev_at_t = 0.0;      // 29.1174 / (1 + t^3)
    double uniform_ref = 0.0;      // 0.7655
};

// c (t/b)^3 exp{2(c - b)(t/b)^2}
double gamma_budget(const BoundParams& p);

CenterQuantities center_quantities(const BoundParams& p);

/// Every admissibility condition, evaluated literally with zero slack.
FeasibilityReport check_feasibility(const BoundParams& p, const CenterQuantities& q);

// b^3 (1 + e)
double tail_bound(double b);

// 29.1174 / (1 + t^3)
double nagaev_bound(double t);

/// Evaluates B_T, B_C and C without consulting the feasibility conditions.
/// The numbers are only a valid bound when check_feasibility passes.
BoundResult evaluate_formulas(const BoundParams& p, const CenterQuantities& q);

/// B_T, B_C and C = max(B_T, B_C), or the failing report when (t, tau, b)
/// is not admissible.
std::variant<BoundResult, FeasibilityReport> compute_bounds(const BoundParams& p,
                                                            const CenterQuantities& q);

/// Convenience bundle used by the CLI and the bindings.
struct Evaluation {
    BoundParams params;
    CenterQuantities quantities;
    FeasibilityReport feasibility;
    BoundResult formulas;           // always populated
    std::optional<BoundResult> result;  // present iff feasible
};

Evaluation evaluate(const BoundParams& p);

}  // namespace cltbound
