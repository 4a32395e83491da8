#pragma once

#include <optional>

namespace cltbound {

// Admissible (tau, b) region for a coordinate t.
struct ParamRanges {
    double t = 0.0;
    double b_lo = 0.0;
    double b_hi = 0.0;
    double tau_hi = 0.0;
    // Depends on the candidate b; present only when one was supplied.
    std::optional<double> tau_lo;

    bool b_nonempty() const { return b_lo < b_hi; }
};

// b_hi = cbrt(30 / (1 + e)); it makes the tail bound b^3 (1 + e) equal 30.
double b_upper();

// 2t / (t + sqrt(t^2 - 6))
double b_lower(double t);

// min{(1 + sqrt(1 - 10/t^2)) / 2, 1 - sqrt(3)/t}
double tau_upper(double t);

// max{tau1(b), (1 - sqrt(1 - 10/t^2)) / 2}, where tau1 is the upper root of
// tau^2 - tau + p with p = 2(b - 1)/b^2 - 1/t^2, or -inf when 4p > 1.
double tau_lower(double t, double b);

/// Throws std::invalid_argument when t < kMinCoordinate (or is not finite).
ParamRanges param_ranges(double t, std::optional<double> b = std::nullopt);

}  // namespace cltbound
