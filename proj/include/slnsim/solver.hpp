#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slnsim/bath.hpp"
#include "slnsim/model.hpp"
#include "slnsim/noise.hpp"

namespace slnsim {

enum class Method { Sled, Sln, Lindblad };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

using DensityMatrix = Eigen::MatrixXcd;

DensityMatrix level_state(int n_levels, int level);
// (|0> + |1>)/sqrt(2) projector, the sigma_x pointer state.
DensityMatrix pointer_state(int n_levels);

// --- superoperator algebra (column-major vec convention) --------------------

Eigen::MatrixXcd left_mult_superop(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd right_mult_superop(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd commutator_superop(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd anticommutator_superop(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd dissipator_superop(const Eigen::MatrixXcd& c);

// v <- exp(h S) v. Truncated Taylor applied to the vector, with power-of-two
// substepping keeping ||h S||_1 <= 1 per substep; exact to machine precision,
// no splitting error.
void apply_step_exponential(const Eigen::MatrixXcd& s, double h, Eigen::VectorXcd& v,
                            Eigen::VectorXcd& term, Eigen::VectorXcd& acc);

// --- observables -------------------------------------------------------------

// Linear functional o(rho) = Re sum_ij W_ij rho_ij.
struct Observable {
  std::string name;
  Eigen::VectorXcd weight;  // vec(W), column-major
};

Observable population_observable(int n_levels, int level);
Observable coherence_observable(int n_levels, int row, int col, bool imag_part);
Observable trace_observable(int n_levels, bool imag_part);
// populations, Re/Im rho_{10}, Re/Im trace
std::vector<Observable> default_observables(int n_levels);

// --- per-trajectory propagation ---------------------------------------------

// Lindblad rates per transition built from golden-rule matrix elements,
// upward rates fixed by detailed balance.
struct LindbladSpec {
  std::vector<std::pair<double, Eigen::MatrixXcd>> channels;  // (rate, jump op)

  static LindbladSpec from_bath(const SystemModel& model, const BathSpec& bath,
                                bool normalized_coupling = true);
};

// One-step generator assembly plus exact exponential stepping for the three
// methods. Immutable static parts; per-step work buffers internal.
class Propagator {
 public:
  Propagator(const SystemModel& model, const BathSpec& bath, Method method,
             std::optional<PulseSpec> pulse = std::nullopt,
             std::optional<LindbladSpec> lindblad = std::nullopt);

  int levels() const { return n_; }

  // Advances vec(rho) over [t, t+h]. xi/nu are the noise values attached to
  // this step; the drive coefficient is evaluated at the step midpoint.
  void step(Eigen::VectorXcd& rho, double t, double h, std::complex<double> xi,
            std::complex<double> nu);

 private:
  int n_;
  bool has_noise_commutator_ = false;
  bool has_nu_ = false;
  bool has_drive_ = false;
  SystemModel model_;
  std::optional<PulseSpec> pulse_;
  Eigen::MatrixXcd base_;
  Eigen::MatrixXcd comm_q_;
  Eigen::MatrixXcd work_;
  Eigen::MatrixXcd acomm_q_;
  Eigen::VectorXcd buf_term_, buf_acc_;
};

struct TrajectoryOptions {
  int record_stride = 1;
  double clip_norm = 1e3;
};

struct TrajectorySeries {
  std::vector<double> times;
  Eigen::MatrixXd values;  // n_obs x n_rec
  bool clipped = false;
};

// Propagates one noise realization (drawn internally for SLED/SLN; none for
// Lindblad) and records the observables every record_stride steps.
TrajectorySeries run_trajectory(const SystemModel& model, const BathSpec& bath,
                                const NoiseGrid& grid, std::uint64_t seed, Method method,
                                const DensityMatrix& initial,
                                const std::vector<Observable>& observables,
                                std::optional<PulseSpec> pulse = std::nullopt,
                                TrajectoryOptions options = {});

// --- ensemble ----------------------------------------------------------------

struct EnsembleOptions {
  long n_samples = 1000;
  std::uint64_t base_seed = 1;
  int workers = 1;
  int record_stride = 1;
  double clip_norm = 1e3;
  double max_clip_fraction = 1e-3;
};

struct EnsembleStats {
  std::vector<double> times;
  std::vector<std::string> names;
  Eigen::MatrixXd mean;       // n_obs x n_rec
  Eigen::MatrixXd std_error;  // n_obs x n_rec
  long n_samples = 0;
  long n_clipped = 0;
  double wall_seconds = 0.0;
  double steps_per_second = 0.0;

  int index_of(const std::string& name) const;
};

// Trajectory seeds form the ladder base_seed + i. Workers claim fixed blocks
// of trajectories; block partial sums merge in block order, so results are
// bit-identical for any worker count.
EnsembleStats run_ensemble(const SystemModel& model, const BathSpec& bath, const NoiseGrid& grid,
                           Method method, const DensityMatrix& initial,
                           const std::vector<Observable>& observables, const EnsembleOptions& opts,
                           std::optional<PulseSpec> pulse = std::nullopt);

struct SteadyEstimate {
  double mean = 0.0;
  double sigma = 0.0;
  int points = 0;
};

// Time average over [t_a, t_b]; sigma is the window average of the per-point
// standard errors (conservative under time correlation).
SteadyEstimate extract_steady(const EnsembleStats& stats, const std::string& name, double t_a,
                              double t_b);

}  // namespace slnsim
