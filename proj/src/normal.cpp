#include "cltbound/normal.hpp"

#include <cmath>

namespace cltbound {

long double normal_cdf_complement(long double t) {
    constexpr long double inv_sqrt2 = 0.707106781186547524400844362104849039L;
    return 0.5L * std::erfc(t * inv_sqrt2);
}

long double normal_cdf(long double t) { return normal_cdf_complement(-t); }

}  // namespace cltbound
