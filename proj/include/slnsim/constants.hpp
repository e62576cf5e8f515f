#pragma once

namespace slnsim {

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209;

inline constexpr double pi = 3.14159265358979323846264338;

}  // namespace slnsim
