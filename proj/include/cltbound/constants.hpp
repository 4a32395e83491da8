#pragma once

#include <numbers>

namespace cltbound {

// Smallest coordinate for which the admissible parameter region is nonempty.
inline constexpr double kMinCoordinate = 3.18;

// Best known uniform Berry-Esseen constant A.
inline constexpr double kUniformConstant = 0.7655;

// Best known universal nonuniform constant C in C / (1 + |t|^3).
inline constexpr double kNonuniformConstant = 29.1174;

// 2 * kUniformConstant, as printed in the center bound.
inline constexpr double kCenterFactor = 1.531;

// Tail exponent parameter; the bounds are stated for c = 1.
inline constexpr double kTailExponent = 1.0;

// 1 + e, the tail factor and the limit of C(t) as t grows.
inline constexpr double kOnePlusE = 1.0 + std::numbers::e;

}  // namespace cltbound
