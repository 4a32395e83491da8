#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cltbound/distribution.hpp"
#include "cltbound/optimizer.hpp"

namespace cltbound {

/// Maps t to C(t), or nullopt when no admissible parameters exist at t.
using BoundProvider = std::function<std::optional<double>(double t)>;

/// Thread-safe memoizing provider backed by optimize().
class OptimizedBound {
public:
    explicit OptimizedBound(GridSteps steps = {}) : steps_(steps) {}

    std::optional<double> operator()(double t);
    BoundProvider provider();

private:
    GridSteps steps_;
    std::mutex mutex_;
    std::map<double, std::optional<double>> cache_;
};

/// Thrown when the bound provider has no value at a requested t.
struct InfeasibleCoordinate : std::runtime_error {
    explicit InfeasibleCoordinate(double t);
    double t;
};

enum class Tail { upper, lower };

struct VerificationReport {
    std::string distribution_id;
    int n = 0;
    Tail tail = Tail::upper;
    std::vector<double> t_grid;
    // ratios[i] = sup over x >= t_grid[i] of sqrt(n) x^3 |F_n(x) - Phi(x)| / (rho C(t_grid[i])).
    std::vector<double> ratios;
    double max_ratio = 0.0;
    std::vector<double> violations;  // grid points whose ratio exceeds 1
};

/// Checks sqrt(n) x^3 |F_n(x) - Phi(x)| / rho <= C(t) for every x >= t
/// (x <= -t for the lower tail), using the exact law of the normalized sum.
///
/// F_n is a step function and x^3 |F_n(x) - Phi(x)| is monotone between
/// jumps once x > sqrt(3), so the sup is attained at t itself or at a
/// one-sided limit at some support point beyond t. Every such point is
/// evaluated; no x cutoff is needed since the support is finite.
///
/// Throws InfeasibleCoordinate when the provider has no C(t), and
/// std::invalid_argument for t < 3.18.
VerificationReport verify_bound(const DiscreteDistribution& dist, int n, std::span<const double> t_grid,
                                const BoundProvider& c_of_t, Tail tail = Tail::upper);

/// Overload reusing a prebuilt sum law.
VerificationReport verify_bound(const DiscreteDistribution& dist, const SumDistribution& sum,
                                std::span<const double> t_grid, const BoundProvider& c_of_t,
                                Tail tail = Tail::upper);

struct CiBound {
    double t = 0.0;              // sqrt(n) eps
    double c_value = 0.0;        // C(t)
    double normal_term = 0.0;    // 1 - Phi(t)
    double nonuniform_term = 0.0;  // rho C(t) / (n^2 eps^3)
    double bound = 0.0;          // 2 (normal_term + nonuniform_term)
};

/// Upper bound on P(|mean - theta| > eps) for n i.i.d. observations:
/// 2 (1 - Phi(sqrt(n) eps) + rho C(sqrt(n) eps) / (n^2 eps^3)).
///
/// The inequality itself holds for sqrt(n) eps >= 1, but C is only tabulated
/// for t >= 3.18; smaller arguments throw std::invalid_argument.
CiBound ci_bound(long long n, double eps, double rho, const BoundProvider& c_of_t);

// t_min, t_min + step, ... up to t_max (inclusive within step * 1e-9).
std::vector<double> coordinate_grid(double t_min, double t_max, double step);

}  // namespace cltbound
