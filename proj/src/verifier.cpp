#include "cltbound/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cltbound/constants.hpp"
#include "cltbound/normal.hpp"

namespace cltbound {
namespace {

double upper_tail(double x) { return static_cast<double>(normal_cdf_complement(x)); }

// sqrt(n) |x|^3 |tail_law - tail_normal| / rho
double scaled_gap(double x, double law_tail, int n, double rho) {
    const double ax = std::abs(x);
    return std::sqrt(static_cast<double>(n)) * ax * ax * ax * std::abs(law_tail - upper_tail(ax)) / rho;
}

}  // namespace

std::optional<double> OptimizedBound::operator()(double t) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(t); it != cache_.end()) return it->second;
    }
    const OptimizationResult r = optimize(t, steps_);
    std::optional<double> value;
    if (r.feasible()) value = r.c_value();
    std::lock_guard lock(mutex_);
    cache_.emplace(t, value);
    return value;
}

BoundProvider OptimizedBound::provider() {
    return [this](double t) { return (*this)(t); };
}

InfeasibleCoordinate::InfeasibleCoordinate(double t_)
    : std::runtime_error("no admissible (tau, b) at t = " + std::to_string(t_)), t(t_) {}

VerificationReport verify_bound(const DiscreteDistribution& dist, int n, std::span<const double> t_grid,
                                const BoundProvider& c_of_t, Tail tail) {
    if (t_grid.empty()) {
        VerificationReport empty;
        empty.distribution_id = dist.id();
        empty.n = n;
        empty.tail = tail;
        return empty;
    }
    return verify_bound(dist, SumDistribution(dist, n), t_grid, c_of_t, tail);
}

VerificationReport verify_bound(const DiscreteDistribution& dist, const SumDistribution& sum,
                                std::span<const double> t_grid, const BoundProvider& c_of_t, Tail tail) {
    VerificationReport report;
    report.distribution_id = dist.id();
    report.n = sum.n();
    report.tail = tail;
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    if (t_grid.empty()) return report;

    const int n = sum.n();
    const double rho = dist.rho();
    const auto& pts = sum.points();

    // Distance from the origin of each jump point on the chosen side, the
    // larger of the two one-sided gaps there, and a running max outward.
    std::vector<double> dist_out;
    std::vector<double> gap;
    if (tail == Tail::upper) {
        for (double p : pts) {
            if (p <= 0.0) continue;
            dist_out.push_back(p);
            gap.push_back(std::max(scaled_gap(p, sum.sf(p), n, rho), scaled_gap(p, sum.sf_left(p), n, rho)));
        }
    } else {
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            const double p = *it;
            if (p >= 0.0) continue;
            dist_out.push_back(-p);
            gap.push_back(std::max(scaled_gap(p, sum.cdf(p), n, rho), scaled_gap(p, sum.cdf_left(p), n, rho)));
        }
    }
    std::vector<double> outward_max(gap.size() + 1, 0.0);
    for (std::size_t i = gap.size(); i-- > 0;) outward_max[i] = std::max(gap[i], outward_max[i + 1]);

    for (double t : t_grid) {
        if (!std::isfinite(t) || t < kMinCoordinate) {
            throw std::invalid_argument("t must be ≥ 3.18, got " + std::to_string(t));
        }
        const std::optional<double> c = c_of_t(t);
        if (!c) throw InfeasibleCoordinate(t);

        // The point t itself, then both one-sided limits at every jump in
        // the closed range [t, inf).
        double sup = tail == Tail::upper ? scaled_gap(t, sum.sf(t), n, rho)
                                         : scaled_gap(-t, sum.cdf_left(-t), n, rho);
        const auto first = std::lower_bound(dist_out.begin(), dist_out.end(), t) - dist_out.begin();
        sup = std::max(sup, outward_max[first]);

        const double ratio = sup / *c;
        report.ratios.push_back(ratio);
        report.max_ratio = std::max(report.max_ratio, ratio);
        if (ratio > 1.0) report.violations.push_back(t);
    }
    return report;
}

CiBound ci_bound(long long n, double eps, double rho, const BoundProvider& c_of_t) {
    if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be finite and > 0");
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be finite and >= 1");

    const double nd = static_cast<double>(n);
    const double t = std::sqrt(nd) * eps;
    if (t < kMinCoordinate) {
        throw std::invalid_argument("sqrt(n) eps = " + std::to_string(t) +
                                    " is outside the bound's domain: the inequality needs sqrt(n) eps ≥ 1 "
                                    "and C(t) is only available for t ≥ 3.18");
    }
    const std::optional<double> c = c_of_t(t);
    if (!c) throw InfeasibleCoordinate(t);

    CiBound out;
    out.t = t;
    out.c_value = *c;
    out.normal_term = upper_tail(t);
    out.nonuniform_term = rho * *c / (nd * nd * eps * eps * eps);
    out.bound = 2.0 * (out.normal_term + out.nonuniform_term);
    return out;
}

std::vector<double> coordinate_grid(double t_min, double t_max, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("t-step must be positive");
    std::vector<double> grid;
    for (long k = 0;; ++k) {
        double t = t_min + static_cast<double>(k) * step;
        t = std::round(t * 1e9) / 1e9;
        if (t > t_max + step * 1e-9) break;
        grid.push_back(t);
    }
    return grid;
}

}  // namespace cltbound
