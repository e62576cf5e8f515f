#pragma once

#include <complex>

namespace slnsim {

enum class CutoffFamily { Drude2, Exponential };

// Ohmic bath with a high-frequency cutoff. kappa is the zero-temperature
// Born-Markov decay rate of the 0<->1 transition; hbar_beta is the inverse
// temperature in time units, omega_q_ref the qubit frequency entering the
// J(w) normalization.
struct BathSpec {
  double kappa = 0.0;
  double omega_c = 50.0;
  double hbar_beta = 1.0;
  double omega_q_ref = 1.0;
  CutoffFamily cutoff_family = CutoffFamily::Drude2;

  void validate() const;
};

// Per-transition parameters of a second, uncontrolled bath.
struct IntrinsicBathSpec {
  double gamma = 0.0;  // zero-temperature rate
  double n_i = 0.0;    // occupation at the system frequency

  void validate() const;
};

// J(w) for w >= 0; throws on negative w (callers use the odd extension
// explicitly through two-sided functions below).
double spectral_density(const BathSpec& b, double omega);

// Odd extension J(-w) = -J(w), used by the two-sided spectral functions.
double spectral_density_odd(const BathSpec& b, double omega);

// n_beta(w) = 1/(exp(hbar beta w) - 1). The same expression evaluated at
// w < 0 equals -(1 + n_beta(|w|)), which is the two-sided convention.
double bose_occupation(double hbar_beta, double omega);

// Two-sided power spectrum S(w) = J(w)[n_beta(w) + 1] with odd J. Continuous
// at w = 0 with S(0) = kappa/(hbar beta omega_q).
double power_spectrum(const BathSpec& b, double omega);

// Two-sided spectral density of the colored (quantum) part of Re L, i.e. the
// target spectrum of the real SLED noise after the classical white part is
// moved into the deterministic generator:
//   (J(|w|)/2) [coth(hbar beta |w|/2) - 2/(hbar beta |w|)].
// Even in w, vanishes at w = 0, nonnegative everywhere.
double sled_noise_spectrum(const BathSpec& b, double omega);

// Spectrum of the full quantum noise, (J(|w|)/2) coth(hbar beta |w|/2);
// this is the squared modulus of the first synthesis window.
double symmetric_noise_spectrum(const BathSpec& b, double omega);

// Bath autocorrelation L(t) = (1/2pi) int_0^inf J(w) {coth(hb w/2) cos wt
// - i sin wt} dw via panel-split quadrature.
std::complex<double> correlation_function(const BathSpec& b, double t,
                                          double rel_tol = 1e-9);

// Re of the correlation function of the colored SLED noise alone.
double sled_correlation(const BathSpec& b, double t, double rel_tol = 1e-9);

// K = kappa / (pi omega_q)
double kondo_parameter(const BathSpec& b);

// kappa_T = kappa coth(hbar beta omega_q / 2), the thermally enhanced
// weak-coupling decay rate that sets the steady-state averaging window.
double thermal_rate(const BathSpec& b);

}  // namespace slnsim
