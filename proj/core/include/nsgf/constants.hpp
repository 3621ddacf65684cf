#pragma once

#include <numbers>

namespace nsgf {

inline constexpr double pi = std::numbers::pi;

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209;

}  // namespace nsgf
