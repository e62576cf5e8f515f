#pragma once

#include <Eigen/Dense>

namespace slnsim {

enum class ModelKind { IdealQubit, Transmon };

struct TransmonSpec {
  double e_j = 100.0;     // Josephson energy
  double e_c = 1.0;       // charging energy per Cooper pair
  int n_levels = 5;       // eigenstates kept
  int charge_cutoff = 30; // charge basis runs n = -M..M

  void validate() const;
};

// Closed system: eigenfrequencies (gauge-shifted so omega_0 = 0) and the
// coupling matrix <k|n|m> in the eigenbasis. Immutable after construction and
// safe to share across trajectories.
struct SystemModel {
  Eigen::VectorXd omega;   // strictly increasing, omega(0) = 0
  Eigen::MatrixXd q_op;    // real symmetric
  ModelKind kind = ModelKind::IdealQubit;

  int levels() const { return static_cast<int>(omega.size()); }
  double omega_q() const { return omega(1) - omega(0); }

  // Frequencies divided by omega_q, so the qubit transition is 1. q_op is
  // dimensionless and unaffected.
  SystemModel in_qubit_units() const;
};

struct PulseSpec {
  double g = 0.0025;       // Rabi angular frequency on the plateau
  double rise_time = 0.0;
  double total_area = 0.0; // rotating-frame area, pi for a pi pulse
  void validate() const;

  double plateau_time() const { return total_area / g - rise_time; }
  double duration() const { return total_area / g + rise_time; }
  // Trapezoidal envelope; the plateau amplitude equals g so the rotating-
  // frame rotation angle is the amplitude area int A dt.
  double envelope(double t) const;
};

// Eigenpairs of 4 E_C n^2 - E_J cos(phi) in the truncated charge basis.
// Eigenvector phases fixed so <k|n|k+1> >= 0. Throws if the kept frequencies
// move by more than 1e-9 relative when the cutoff is raised by 5.
SystemModel diagonalize_transmon(const TransmonSpec& spec);

SystemModel ideal_qubit(double omega_q);

// (omega_2 - omega_1)/(omega_1 - omega_0) - 1; needs at least 3 levels.
double relative_anharmonicity(const SystemModel& model);

// q_op, optionally rescaled so |<0|q|1>| = 1. The normalized form keeps kappa
// interpretable as the 0<->1 zero-temperature decay rate for any N.
Eigen::MatrixXd coupling_operator(const SystemModel& model, bool normalized = true);

// hbar A(t) cos(omega_q t) q for the resonant trapezoidal pulse; zero outside
// the pulse support.
Eigen::MatrixXd drive_term(const SystemModel& model, const PulseSpec& pulse, double t);

// A(t) cos(omega_q t), the scalar coefficient multiplying q in the drive.
double drive_coefficient(const SystemModel& model, const PulseSpec& pulse, double t);

}  // namespace slnsim
