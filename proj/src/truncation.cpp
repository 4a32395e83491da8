#include "cltbound/truncation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cltbound {

MomentEnvelope moment_envelope(const TruncationInput& in) {
    if (!(in.s >= 0.0) || !std::isfinite(in.s)) {
        throw std::invalid_argument("moment_envelope: tilt s must be finite and >= 0, got " +
                                    std::to_string(in.s));
    }
    if (!(in.h > 0.0)) {
        throw std::invalid_argument("moment_envelope: truncation level h must be > 0, got " +
                                    std::to_string(in.h));
    }
    if (!(in.rho >= 1.0)) {
        throw std::invalid_argument("moment_envelope: rho must be >= 1, got " +
                                    std::to_string(in.rho));
    }

    const double s = in.s;
    const double h = in.h;
    const double rho = in.rho;
    const double sh = s * h;
    const double esh = std::exp(sh);

    MomentEnvelope env;
    env.beta_hi = 1.0 + 0.5 * s * s + rho / (h * h * h) * std::expm1(sh);
    env.m1_hi = s + rho / (h * h) * esh;
    env.m2_hi = 1.0 + rho / h * esh;
    env.m3_hi = rho * esh;
    env.abs_m1_hi = std::sqrt(env.beta_hi * env.m2_hi);

    env.m1_lo = s - rho / (h * h) * (1.0 + sh + 0.5 * sh * sh);
    env.m2_lo = 1.0 - rho / h * (1.0 + sh);
    env.ey_lo = -rho / (h * h);
    env.ey2_lo = 1.0 - rho / h;
    env.ey3_lo = -rho;
    return env;
}

double psi_split(std::int64_t n, double t, double a, double b, double c, double rho) {
    if (n < 1) throw std::invalid_argument("psi_split: n must be >= 1");
    if (!(t > 1.0)) throw std::invalid_argument("psi_split: t must be > 1");
    if (!(a > 0.0)) throw std::invalid_argument("psi_split: a must be > 0");
    if (!(c >= 1.0)) throw std::invalid_argument("psi_split: c must be >= 1");
    if (!(b > c)) throw std::invalid_argument("psi_split: b must exceed c");
    if (!(rho >= 1.0)) throw std::invalid_argument("psi_split: rho must be >= 1");

    const double arg = std::sqrt(static_cast<double>(n)) * t * t * t / (rho * a);
    if (!(arg > 1.0)) {
        throw std::invalid_argument("psi_split: sqrt(n) t^3 / (rho a) must exceed 1");
    }
    return b * b / (2.0 * (b - c)) * std::log(arg);
}

}  // namespace cltbound
