#pragma once

namespace cltbound {

/// Upper tail 1 - Phi(t) of the standard normal law, via erfc so there is no
/// 1 - (nearly 1) cancellation.
///
/// Returned in extended precision: 1 - Phi(40) ~ 3.7e-350 is below the
/// binary64 range. Relative error stays under 1e-12 on [-40, 40].
long double normal_cdf_complement(long double t);

// Phi(t)
long double normal_cdf(long double t);

}  // namespace cltbound
