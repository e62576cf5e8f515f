#include "slnsim/bath.hpp"

#include <cmath>
#include <stdexcept>

#include "slnsim/constants.hpp"
#include "slnsim/quadrature.hpp"

namespace slnsim {

namespace {

// coth(x) - 1/x, stable near x = 0.
double coth_minus_inv(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return x * (1.0 / 3.0 - x2 / 45.0 + 2.0 * x2 * x2 / 945.0);
  }
  return 1.0 / std::tanh(x) - 1.0 / x;
}

}  // namespace

void BathSpec::validate() const {
  if (kappa < 0.0) throw std::invalid_argument("BathSpec: kappa must be >= 0");
  if (omega_c <= 0.0) throw std::invalid_argument("BathSpec: omega_c must be > 0");
  if (hbar_beta <= 0.0) throw std::invalid_argument("BathSpec: hbar_beta must be > 0");
  if (omega_q_ref <= 0.0) throw std::invalid_argument("BathSpec: omega_q_ref must be > 0");
}

void IntrinsicBathSpec::validate() const {
  if (gamma < 0.0) throw std::invalid_argument("IntrinsicBathSpec: gamma must be >= 0");
  if (n_i < 0.0) throw std::invalid_argument("IntrinsicBathSpec: n_i must be >= 0");
}

double spectral_density(const BathSpec& b, double omega) {
  if (omega < 0.0) {
    throw std::invalid_argument("spectral_density: omega must be >= 0 (use the odd extension)");
  }
  switch (b.cutoff_family) {
    case CutoffFamily::Drude2: {
      const double u = omega / b.omega_c;
      const double d = 1.0 + u * u;
      return (b.kappa / b.omega_q_ref) * omega / (d * d);
    }
    case CutoffFamily::Exponential:
      return (b.kappa / b.omega_q_ref) * omega * std::exp(-omega / b.omega_c);
  }
  return 0.0;
}

double spectral_density_odd(const BathSpec& b, double omega) {
  return omega >= 0.0 ? spectral_density(b, omega) : -spectral_density(b, -omega);
}

double bose_occupation(double hbar_beta, double omega) {
  if (omega == 0.0) {
    throw std::invalid_argument("bose_occupation: omega must be nonzero");
  }
  return 1.0 / std::expm1(hbar_beta * omega);
}

double power_spectrum(const BathSpec& b, double omega) {
  if (omega == 0.0) {
    return (b.kappa / b.omega_q_ref) / b.hbar_beta;
  }
  return spectral_density_odd(b, omega) * (bose_occupation(b.hbar_beta, omega) + 1.0);
}

double sled_noise_spectrum(const BathSpec& b, double omega) {
  const double w = std::abs(omega);
  if (w == 0.0) return 0.0;
  return 0.5 * spectral_density(b, w) * coth_minus_inv(0.5 * b.hbar_beta * w);
}

double symmetric_noise_spectrum(const BathSpec& b, double omega) {
  const double w = std::abs(omega);
  if (w == 0.0) {
    return (b.kappa / b.omega_q_ref) / b.hbar_beta;
  }
  return 0.5 * spectral_density(b, w) / std::tanh(0.5 * b.hbar_beta * w);
}

std::complex<double> correlation_function(const BathSpec& b, double t, double rel_tol) {
  const double at = std::abs(t);
  const double re = oscillatory_integral(
                        [&](double w) { return 2.0 * symmetric_noise_spectrum(b, w); }, at,
                        Trig::Cos, rel_tol) /
                    (2.0 * pi);
  double im = -oscillatory_integral([&](double w) { return spectral_density(b, w); }, at,
                                    Trig::Sin, rel_tol) /
              (2.0 * pi);
  if (t < 0.0) im = -im;
  return {re, im};
}

double sled_correlation(const BathSpec& b, double t, double rel_tol) {
  return oscillatory_integral([&](double w) { return 2.0 * sled_noise_spectrum(b, w); },
                              std::abs(t), Trig::Cos, rel_tol) /
         (2.0 * pi);
}

double kondo_parameter(const BathSpec& b) { return b.kappa / (pi * b.omega_q_ref); }

double thermal_rate(const BathSpec& b) {
  return b.kappa / std::tanh(0.5 * b.hbar_beta * b.omega_q_ref);
}

}  // namespace slnsim
