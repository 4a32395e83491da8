#include "cltbound/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cltbound/constants.hpp"

namespace cltbound {

double b_upper() { return std::cbrt(30.0 / kOnePlusE); }

double b_lower(double t) { return 2.0 * t / (t + std::sqrt(t * t - 6.0)); }

double tau_upper(double t) {
    const double root = std::sqrt(1.0 - 10.0 / (t * t));
    return std::min(0.5 * (1.0 + root), 1.0 - std::sqrt(3.0) / t);
}

double tau_lower(double t, double b) {
    const double p = 2.0 * (b - 1.0) / (b * b) - 1.0 / (t * t);
    const double tau1 = 4.0 * p <= 1.0 ? 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * p))
                                       : -std::numeric_limits<double>::infinity();
    return std::max(tau1, 0.5 * (1.0 - std::sqrt(1.0 - 10.0 / (t * t))));
}

ParamRanges param_ranges(double t, std::optional<double> b) {
    if (!std::isfinite(t) || t < kMinCoordinate) {
        throw std::invalid_argument("t must be ≥ 3.18, got " + std::to_string(t));
    }
    ParamRanges r;
    r.t = t;
    r.b_lo = b_lower(t);
    r.b_hi = b_upper();
    r.tau_hi = tau_upper(t);
    if (b) r.tau_lo = tau_lower(t, *b);
    return r;
}

}  // namespace cltbound
