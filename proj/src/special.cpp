#include "slnsim/special.hpp"

#include <cmath>

#include "slnsim/constants.hpp"

namespace slnsim {

namespace {

using cd = std::complex<double>;

// B_{2n}/(2n) for the digamma asymptotic, n = 1..7.
constexpr double kDigammaCoef[] = {
    1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
};

// B_{2n} for the trigamma asymptotic, n = 1..7.
constexpr double kBernoulli[] = {
    1.0 / 6.0,  -1.0 / 30.0,  1.0 / 42.0,  -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
};

cd digamma_asymptotic(cd z) {
  const cd inv = 1.0 / z;
  const cd inv2 = inv * inv;
  cd sum = std::log(z) - 0.5 * inv;
  cd p = inv2;
  for (double c : kDigammaCoef) {
    sum -= c * p;
    p *= inv2;
  }
  return sum;
}

cd trigamma_asymptotic(cd z) {
  const cd inv = 1.0 / z;
  const cd inv2 = inv * inv;
  cd sum = inv + 0.5 * inv2;
  cd p = inv * inv2;
  for (double c : kBernoulli) {
    sum += c * p;
    p *= inv2;
  }
  return sum;
}

}  // namespace

std::complex<double> digamma(std::complex<double> z) {
  if (z.real() < 0.0) {
    // psi(z) = psi(1-z) - pi*cot(pi*z)
    const cd pz = pi * z;
    return digamma(1.0 - z) - pi * std::cos(pz) / std::sin(pz);
  }
  cd shift(0.0, 0.0);
  while (std::abs(z) < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return digamma_asymptotic(z) + shift;
}

std::complex<double> trigamma(std::complex<double> z) {
  if (z.real() < 0.0) {
    // psi'(z) = -psi'(1-z) + pi^2/sin^2(pi*z)
    const cd s = std::sin(pi * z);
    return -trigamma(1.0 - z) + pi * pi / (s * s);
  }
  cd shift(0.0, 0.0);
  while (std::abs(z) < 10.0) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  return trigamma_asymptotic(z) + shift;
}

}  // namespace slnsim
