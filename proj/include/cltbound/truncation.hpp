#pragma once

#include <cstdint>

namespace cltbound {

// Truncated variable Y = X if |X| <= h, else 0, with X standardized
// (E X = 0, E X^2 = 1, E|X|^3 = rho).
struct TruncationInput {
    double s = 0.0;    // exponential tilt, >= 0
    double h = 1.0;    // truncation level, > 0
    double rho = 1.0;  // third absolute moment, >= 1
};

/// Closed-form envelope on the tilted moments of Y.
///
/// Upper bounds hold for beta = E e^{sY}, m1 = E Y e^{sY}, m2 = E Y^2 e^{sY},
/// m3 = E|Y|^3 e^{sY} and E|Y| e^{sY}. The lower bounds cover m1 and m2 as
/// well as the untilted moments E Y, E Y^2 and E Y^3.
struct MomentEnvelope {
    double beta_hi = 0.0;
    double m1_hi = 0.0;
    double m2_hi = 0.0;
    double m3_hi = 0.0;
    double abs_m1_hi = 0.0;  // sqrt(beta_hi * m2_hi)

    double m1_lo = 0.0;  // may be negative
    double m2_lo = 0.0;  // 1 - (rho/h)(1 + sh)
    double ey_lo = 0.0;
    double ey2_lo = 0.0;
    double ey3_lo = 0.0;
};

/// Throws std::invalid_argument unless s >= 0, h > 0 and rho >= 1.
MomentEnvelope moment_envelope(const TruncationInput& in);

/// Point where the tail and center regimes meet:
/// b^2 / (2(b - c)) * log(sqrt(n) t^3 / (rho a)).
///
/// Diagnostic only; the bound C(t) covers both regimes for every n.
/// Throws std::invalid_argument when b <= c, c < 1, a <= 0, t <= 1, rho < 1,
/// n < 1, or when the log argument does not exceed 1.
double psi_split(std::int64_t n, double t, double a, double b, double c, double rho);

}  // namespace cltbound
