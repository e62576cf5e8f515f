#include "slnsim/noise.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "slnsim/constants.hpp"
#include "slnsim/rng.hpp"

namespace slnsim {

namespace {

using cd = std::complex<double>;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::uint64_t fnv1a(const unsigned char* data, std::size_t len,
                    std::uint64_t h = 1469598103934665603ull) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void NoiseGrid::validate() const {
  if (h <= 0.0) throw std::invalid_argument("NoiseGrid: h must be > 0");
  if (!is_power_of_two(n_steps)) throw std::invalid_argument("NoiseGrid: n_steps must be a power of two");
  if (oversample < 1) throw std::invalid_argument("NoiseGrid: oversample must be >= 1");
}

double NoiseGrid::omega(int k) const {
  const int n = synth_len();
  const int signed_k = 2 * k <= n ? k : k - n;
  return 2.0 * pi * signed_k / (n * h);
}

std::complex<double> window_w1(const BathSpec& b, double omega) {
  // L(w) - i L_i(w) with L_i = -i J_odd/2: the imaginary parts cancel exactly.
  const double radicand = power_spectrum(b, omega) - 0.5 * spectral_density_odd(b, omega);
  const double scale = power_spectrum(b, std::abs(omega)) + b.kappa / (b.hbar_beta * b.omega_q_ref);
  if (radicand < -1e-12 * scale) {
    throw std::logic_error("window_w1: negative radicand, spectrum convention broken");
  }
  return {std::sqrt(std::max(radicand, 0.0)), 0.0};
}

std::complex<double> chi_response(const BathSpec& b, double omega) {
  if (b.cutoff_family != CutoffFamily::Drude2) {
    throw std::invalid_argument("chi_response: closed form available for the Drude cutoff only");
  }
  if (omega == 0.0) {
    return {b.kappa * b.omega_c / (8.0 * b.omega_q_ref), 0.0};
  }
  const double j = spectral_density_odd(b, omega);
  const double re = 0.25 * j * (b.omega_c / (2.0 * omega)) * (1.0 - omega * omega / (b.omega_c * b.omega_c));
  return {re, 0.25 * j};
}

std::complex<double> window_w2(const BathSpec& b, double omega) {
  return std::sqrt(0.5 * chi_response(b, omega));
}

namespace internal {

// Shared synthesis engine: white-noise channels are filtered in frequency
// space on the oversampled grid and the first n_steps points are kept. The
// engine owns its FFT plans and buffers, so each worker thread keeps its own
// instance.
class SynthEngine {
 public:
  SynthEngine(const BathSpec& b, const NoiseGrid& grid) : bath_(b), grid_(grid) {
    grid.validate();
    b.validate();
    const int n = grid.synth_len();
    time_buf_.resize(n);
    freq_buf_.resize(n);
    work_buf_.resize(n);
  }

  const NoiseGrid& grid() const { return grid_; }
  const BathSpec& bath() const { return bath_; }

  // Tabulates a filter over the FFT bins; the DC and Nyquist bins are forced
  // real so conjugate-symmetric filters give exactly real outputs.
  template <typename F>
  std::vector<cd> tabulate(F filter) const {
    const int n = grid_.synth_len();
    std::vector<cd> w(n);
    for (int k = 0; k < n; ++k) {
      cd v = filter(grid_.omega(k));
      if (k == 0 || 2 * k == n) v = cd(v.real(), 0.0);
      w[k] = v;
    }
    return w;
  }

  // Forward transform of a white-noise channel in the f(w) = int f e^{+iwt}
  // convention: conj of the unscaled DFT for real input, times h.
  void channel_spectrum(std::uint64_t seed, std::uint32_t stream, std::vector<cd>& out) {
    const int n = grid_.synth_len();
    GaussianStream gauss(seed, stream);
    const double amp = 1.0 / std::sqrt(grid_.h);
    for (int i = 0; i < n; ++i) time_buf_[i] = amp * gauss.next();
    fft_.fwd(out, time_buf_);
    for (auto& v : out) v = std::conj(v) * grid_.h;
  }

  // Inverse transform of filter * spectrum, truncated to the first n_steps
  // real samples.
  void filtered_series(const std::vector<cd>& x_freq, const std::vector<cd>& filter,
                       std::vector<double>& out) {
    const int n = grid_.synth_len();
    for (int k = 0; k < n; ++k) work_buf_[k] = filter[k] * x_freq[k];
    fft_.fwd(freq_buf_, work_buf_);
    const double scale = 1.0 / (n * grid_.h);
    out.resize(grid_.n_steps);
    for (int i = 0; i < grid_.n_steps; ++i) out[i] = freq_buf_[i].real() * scale;
  }

 private:
  BathSpec bath_;
  NoiseGrid grid_;
  Eigen::FFT<double> fft_;
  std::vector<cd> time_buf_;
  std::vector<cd> freq_buf_;
  std::vector<cd> work_buf_;
};

}  // namespace internal

SledNoiseGenerator::SledNoiseGenerator(const BathSpec& b, const NoiseGrid& grid)
    : engine_(std::make_unique<internal::SynthEngine>(b, grid)) {
  filter_ = engine_->tabulate(
      [&](double w) { return cd(std::sqrt(sled_noise_spectrum(b, w)), 0.0); });
}

SledNoiseGenerator::~SledNoiseGenerator() = default;
SledNoiseGenerator::SledNoiseGenerator(SledNoiseGenerator&&) noexcept = default;

void SledNoiseGenerator::generate_into(std::uint64_t seed, std::vector<double>& xi) {
  if (engine_->bath().kappa == 0.0) {
    xi.assign(engine_->grid().n_steps, 0.0);
    return;
  }
  engine_->channel_spectrum(seed, 0, spectrum_buf_);
  engine_->filtered_series(spectrum_buf_, filter_, xi);
}

NoiseSample SledNoiseGenerator::generate(std::uint64_t seed) {
  NoiseSample sample;
  sample.seed = seed;
  sample.grid = engine_->grid();
  generate_into(seed, sample.xi_re);
  return sample;
}

SlnNoiseGenerator::SlnNoiseGenerator(const BathSpec& b, const NoiseGrid& grid)
    : engine_(std::make_unique<internal::SynthEngine>(b, grid)) {
  w1_ = engine_->tabulate([&](double w) { return window_w1(b, w); });
  w2_ = engine_->tabulate([&](double w) { return window_w2(b, w); });
  w2_rev_ = engine_->tabulate([&](double w) { return -std::conj(window_w2(b, w)); });
}

SlnNoiseGenerator::~SlnNoiseGenerator() = default;
SlnNoiseGenerator::SlnNoiseGenerator(SlnNoiseGenerator&&) noexcept = default;

NoiseSample SlnNoiseGenerator::generate(std::uint64_t seed) {
  const NoiseGrid& grid = engine_->grid();
  NoiseSample sample;
  sample.seed = seed;
  sample.grid = grid;
  const int n = grid.n_steps;
  if (engine_->bath().kappa == 0.0) {
    sample.xi_re.assign(n, 0.0);
    sample.xi_im.assign(n, 0.0);
    sample.nu.assign(n, cd(0.0, 0.0));
    return sample;
  }

  std::vector<double> xi_r, xi_c_re, xi_c_im, nu_re, nu_im;
  engine_->channel_spectrum(seed, 0, spectrum_buf_);
  engine_->filtered_series(spectrum_buf_, w1_, xi_r);
  engine_->channel_spectrum(seed, 1, spectrum_buf_);
  engine_->filtered_series(spectrum_buf_, w2_, xi_c_re);
  engine_->filtered_series(spectrum_buf_, w2_rev_, nu_im);
  engine_->channel_spectrum(seed, 2, spectrum_buf_);
  engine_->filtered_series(spectrum_buf_, w2_, xi_c_im);
  engine_->filtered_series(spectrum_buf_, w2_rev_, nu_re);

  sample.xi_re.resize(n);
  sample.xi_im.resize(n);
  sample.nu.resize(n);
  for (int i = 0; i < n; ++i) {
    sample.xi_re[i] = xi_r[i] + xi_c_re[i];
    sample.xi_im[i] = xi_c_im[i];
    sample.nu[i] = cd(nu_re[i], nu_im[i]);
  }
  return sample;
}

NoiseSample generate_sled_noise(const BathSpec& b, const NoiseGrid& grid, std::uint64_t seed) {
  SledNoiseGenerator gen(b, grid);
  return gen.generate(seed);
}

NoiseSample generate_sln_noise(const BathSpec& b, const NoiseGrid& grid, std::uint64_t seed) {
  SlnNoiseGenerator gen(b, grid);
  return gen.generate(seed);
}

std::vector<std::complex<double>> lag_correlation(const std::vector<cd>& a,
                                                  const std::vector<cd>& b, int max_lag) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lag_correlation: length mismatch");
  if (max_lag >= n) throw std::invalid_argument("lag_correlation: max_lag must be < length");
  int m = 1;
  while (m < 2 * n) m *= 2;

  // sum_t a(t+j) b(t) = conv(a, rev(b))(j + n - 1), zero padded, no conjugation.
  std::vector<cd> pa(m, cd(0, 0)), pb(m, cd(0, 0));
  for (int i = 0; i < n; ++i) pa[i] = a[i];
  for (int i = 0; i < n; ++i) pb[i] = b[n - 1 - i];
  Eigen::FFT<double> fft;
  std::vector<cd> fa, fb;
  fft.fwd(fa, pa);
  fft.fwd(fb, pb);
  for (int i = 0; i < m; ++i) fa[i] *= fb[i];
  std::vector<cd> conv;
  fft.inv(conv, fa);

  std::vector<cd> out(2 * max_lag + 1);
  for (int j = -max_lag; j <= max_lag; ++j) {
    const int count = n - std::abs(j);
    out[j + max_lag] = conv[j + n - 1] / static_cast<double>(count);
  }
  return out;
}

namespace {

CorrelationCheck reduce_check(std::string name, const std::vector<std::vector<cd>>& per_sample,
                              const std::vector<cd>& target, int max_lag) {
  const int n_lags = 2 * max_lag + 1;
  const auto n_samples = static_cast<double>(per_sample.size());
  CorrelationCheck check;
  check.name = std::move(name);
  check.lags.resize(n_lags);
  check.mean.assign(n_lags, cd(0, 0));
  check.std_error.assign(n_lags, cd(0, 0));
  check.target = target;
  for (int j = 0; j < n_lags; ++j) check.lags[j] = j - max_lag;

  for (const auto& est : per_sample)
    for (int j = 0; j < n_lags; ++j) check.mean[j] += est[j];
  for (auto& v : check.mean) v /= n_samples;

  for (const auto& est : per_sample)
    for (int j = 0; j < n_lags; ++j) {
      const cd d = est[j] - check.mean[j];
      check.std_error[j] += cd(d.real() * d.real(), d.imag() * d.imag());
    }
  for (auto& v : check.std_error) {
    v = cd(std::sqrt(v.real() / (n_samples * (n_samples - 1.0))),
           std::sqrt(v.imag() / (n_samples * (n_samples - 1.0))));
  }

  check.max_abs_z = 0.0;
  for (int j = 0; j < n_lags; ++j) {
    const cd diff = check.mean[j] - check.target[j];
    const double zr = diff.real() / std::max(check.std_error[j].real(), 1e-300);
    const double zi = diff.imag() / std::max(check.std_error[j].imag(), 1e-300);
    check.max_abs_z = std::max({check.max_abs_z, std::abs(zr), std::abs(zi)});
  }
  return check;
}

}  // namespace

NoiseValidationReport validate_noise(const BathSpec& b, const std::vector<NoiseSample>& samples,
                                     int max_lag, double z_threshold) {
  if (samples.size() < 100) {
    throw std::invalid_argument("validate_noise: need at least 100 samples");
  }
  const NoiseGrid& grid = samples.front().grid;
  const bool complex_noise = samples.front().is_complex();
  const int n_lags = 2 * max_lag + 1;

  std::vector<cd> target_xixi(n_lags), target_xinu(n_lags), target_nunu(n_lags, cd(0, 0));
  for (int j = -max_lag; j <= max_lag; ++j) {
    const double tau = j * grid.h;
    if (complex_noise) {
      const cd L = correlation_function(b, tau);
      target_xixi[j + max_lag] = cd(L.real(), 0.0);
      // <xi(t+tau) nu(t)> = i Theta(tau) Im L(tau)
      target_xinu[j + max_lag] = j > 0 ? cd(0.0, L.imag()) : cd(0.0, 0.0);
    } else {
      target_xixi[j + max_lag] = cd(sled_correlation(b, tau), 0.0);
    }
  }

  std::vector<std::vector<cd>> est_xixi, est_xinu, est_nunu;
  est_xixi.reserve(samples.size());
  for (const auto& s : samples) {
    std::vector<cd> xi(grid.n_steps);
    for (int i = 0; i < grid.n_steps; ++i) xi[i] = s.xi(i);
    est_xixi.push_back(lag_correlation(xi, xi, max_lag));
    if (complex_noise) {
      est_xinu.push_back(lag_correlation(xi, s.nu, max_lag));
      est_nunu.push_back(lag_correlation(s.nu, s.nu, max_lag));
    }
  }

  NoiseValidationReport report;
  report.z_threshold = z_threshold;
  report.checks.push_back(reduce_check("<xi xi>", est_xixi, target_xixi, max_lag));
  if (complex_noise) {
    report.checks.push_back(reduce_check("<xi nu>", est_xinu, target_xinu, max_lag));
    report.checks.push_back(reduce_check("<nu nu>", est_nunu, target_nunu, max_lag));
  }
  report.passed = true;
  for (const auto& c : report.checks) {
    if (c.max_abs_z >= z_threshold) report.passed = false;
  }
  return report;
}

std::string NoiseValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": max |z| = " << c.max_abs_z << (c.max_abs_z < z_threshold ? " ok" : " FAIL")
       << "\n";
  }
  os << (passed ? "noise validation passed" : "noise validation FAILED") << "\n";
  return os.str();
}

void dump_noise(const NoiseSample& sample, const BathSpec& b, const std::string& path_prefix) {
  const auto write_array = [&](const std::string& name, const std::vector<double>& data) {
    std::ofstream out(path_prefix + "." + name + ".f64", std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(double)));
  };
  write_array("xi_re", sample.xi_re);
  if (sample.is_complex()) {
    write_array("xi_im", sample.xi_im);
    std::vector<double> nu_re(sample.nu.size()), nu_im(sample.nu.size());
    for (std::size_t i = 0; i < sample.nu.size(); ++i) {
      nu_re[i] = sample.nu[i].real();
      nu_im[i] = sample.nu[i].imag();
    }
    write_array("nu_re", nu_re);
    write_array("nu_im", nu_im);
  }

  std::uint64_t hash = 1469598103934665603ull;
  for (int k = 0; k < sample.grid.synth_len(); ++k) {
    const double s = sled_noise_spectrum(b, sample.grid.omega(k));
    hash = fnv1a(reinterpret_cast<const unsigned char*>(&s), sizeof(s), hash);
  }

  std::ofstream side(path_prefix + ".json");
  side << "{\"h\": " << sample.grid.h << ", \"n_steps\": " << sample.grid.n_steps
       << ", \"oversample\": " << sample.grid.oversample << ", \"seed\": " << sample.seed
       << ", \"complex\": " << (sample.is_complex() ? "true" : "false")
       << ", \"spectrum_hash\": \"" << std::hex << hash << "\"}\n";
}

}  // namespace slnsim
