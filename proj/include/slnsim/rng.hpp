#pragma once

#include <array>
#include <cstdint>

namespace slnsim {

// Philox4x32-10 counter-based generator. Trajectories and noise channels map
// to disjoint (seed, stream) pairs, so parallel generation needs no
// coordination and any sample can be regenerated in isolation.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint32_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::array<std::uint32_t, 4> block(std::uint64_t index) const;

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_;
};

// Standard normal variates via the inverse CDF applied to Philox uniforms.
// Pure floating-point arithmetic, bit-reproducible on one platform.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint32_t stream)
      : philox_(seed, stream) {}

  double next();

 private:
  Philox philox_;
  std::uint64_t block_index_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Inverse of the standard normal CDF (Wichura's AS 241, double precision).
double inverse_normal_cdf(double p);

}  // namespace slnsim
