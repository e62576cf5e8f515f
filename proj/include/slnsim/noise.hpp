#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slnsim/bath.hpp"

namespace slnsim {

// Uniform time grid for noise synthesis and propagation. Synthesis runs on
// the oversampled grid and keeps the first n_steps points, which breaks the
// circular correlation the bare FFT protocol would impose.
struct NoiseGrid {
  double h = 0.0078125;  // 2^-7
  int n_steps = 4096;    // power of two
  int oversample = 2;

  void validate() const;
  int synth_len() const { return n_steps * oversample; }
  // Frequency of FFT bin k, mapped to (-pi/h, pi/h].
  double omega(int k) const;
  double duration() const { return h * n_steps; }
};

struct NoiseSample {
  std::vector<double> xi_re;               // Re xi on the grid
  std::vector<double> xi_im;               // empty for SLED
  std::vector<std::complex<double>> nu;    // empty for SLED
  std::uint64_t seed = 0;
  NoiseGrid grid;

  bool is_complex() const { return !xi_im.empty(); }
  std::complex<double> xi(int i) const {
    return {xi_re[i], xi_im.empty() ? 0.0 : xi_im[i]};
  }
};

// W1(w) = sqrt(L(w) - i L_i(w)). With the odd two-sided conventions the
// radicand equals (J(|w|)/2) coth(hb|w|/2), real and nonnegative; a negative
// radicand signals a broken spectrum convention and aborts.
std::complex<double> window_w1(const BathSpec& b, double omega);

// W2(w) = sqrt(chi_R(w)/2) with the Drude response function
// chi_R(w) = (J(w)/4) [ (w_c/2w)(1 - w^2/w_c^2) + i ].
// Principal branch; conjugate-symmetric in w.
std::complex<double> window_w2(const BathSpec& b, double omega);

std::complex<double> chi_response(const BathSpec& b, double omega);

namespace internal {
class SynthEngine;
}

// Reusable SLED synthesizer: the spectrum table and FFT plans are built once;
// each worker thread keeps its own instance.
class SledNoiseGenerator {
 public:
  SledNoiseGenerator(const BathSpec& b, const NoiseGrid& grid);
  ~SledNoiseGenerator();
  SledNoiseGenerator(SledNoiseGenerator&&) noexcept;

  NoiseSample generate(std::uint64_t seed);
  void generate_into(std::uint64_t seed, std::vector<double>& xi);

 private:
  std::unique_ptr<internal::SynthEngine> engine_;
  std::vector<std::complex<double>> filter_;
  std::vector<std::complex<double>> spectrum_buf_;
};

class SlnNoiseGenerator {
 public:
  SlnNoiseGenerator(const BathSpec& b, const NoiseGrid& grid);
  ~SlnNoiseGenerator();
  SlnNoiseGenerator(SlnNoiseGenerator&&) noexcept;

  NoiseSample generate(std::uint64_t seed);

 private:
  std::unique_ptr<internal::SynthEngine> engine_;
  std::vector<std::complex<double>> w1_, w2_, w2_rev_;
  std::vector<std::complex<double>> spectrum_buf_;
};

// Real xi with spectrum sled_noise_spectrum. Deterministic in (seed, grid, bath).
NoiseSample generate_sled_noise(const BathSpec& b, const NoiseGrid& grid, std::uint64_t seed);

// Complex xi = xi_r + xi_c and nu realizing the SLN correlations
// <xi xi> = Re L, <xi nu> = i Theta Im L, <nu nu> = 0.
NoiseSample generate_sln_noise(const BathSpec& b, const NoiseGrid& grid, std::uint64_t seed);

// --- estimator machinery ---------------------------------------------------

// Stationary lag correlator <a(t+lag) b(t)> without conjugation, averaged over
// the sample and then across samples; z-scores against the target.
struct CorrelationCheck {
  std::string name;
  std::vector<int> lags;
  std::vector<std::complex<double>> mean;
  std::vector<std::complex<double>> std_error;  // per component
  std::vector<std::complex<double>> target;
  double max_abs_z = 0.0;
};

struct NoiseValidationReport {
  std::vector<CorrelationCheck> checks;
  double z_threshold = 4.0;
  bool passed = false;
  std::string summary() const;
};

// Validates a batch of samples against the analytic correlation targets of
// the bath. max_lag in grid steps; requires >= 100 samples.
NoiseValidationReport validate_noise(const BathSpec& b, const std::vector<NoiseSample>& samples,
                                     int max_lag, double z_threshold = 4.0);

// Cross-correlation sum_t a(t+lag) b(t) for lag in [-max_lag, max_lag],
// normalized by the pair count. FFT-based.
std::vector<std::complex<double>> lag_correlation(const std::vector<std::complex<double>>& a,
                                                  const std::vector<std::complex<double>>& b,
                                                  int max_lag);

// Debug dump: little-endian float64 arrays plus a JSON sidecar describing the
// grid, seed and a hash of the synthesis windows.
void dump_noise(const NoiseSample& sample, const BathSpec& b, const std::string& path_prefix);

}  // namespace slnsim
