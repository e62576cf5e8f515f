#include "slnsim/model.hpp"

#include <cmath>
#include <stdexcept>

namespace slnsim {

namespace {

struct ChargeBasisResult {
  Eigen::VectorXd omega;
  Eigen::MatrixXd q_op;
};

ChargeBasisResult solve_charge_basis(double e_j, double e_c, int n_levels, int cutoff) {
  const int dim = 2 * cutoff + 1;
  Eigen::VectorXd charge(dim);
  for (int i = 0; i < dim; ++i) charge(i) = i - cutoff;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) h(i, i) = 4.0 * e_c * charge(i) * charge(i);
  for (int i = 0; i + 1 < dim; ++i) {
    h(i, i + 1) = -0.5 * e_j;
    h(i + 1, i) = -0.5 * e_j;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::MatrixXd vec = es.eigenvectors().leftCols(n_levels);
  Eigen::VectorXd val = es.eigenvalues().head(n_levels);

  // Fix phases so the superdiagonal of <k|n|m> is nonnegative.
  for (int k = 0; k + 1 < n_levels; ++k) {
    const double elem = vec.col(k).cwiseProduct(charge).dot(vec.col(k + 1));
    if (elem < 0.0) vec.col(k + 1) *= -1.0;
  }

  ChargeBasisResult out;
  out.omega = val.array() - val(0);
  out.q_op = vec.transpose() * charge.asDiagonal() * vec;
  out.q_op = 0.5 * (out.q_op + out.q_op.transpose().eval());
  return out;
}

}  // namespace

void TransmonSpec::validate() const {
  if (e_j <= 0.0 || e_c <= 0.0) throw std::invalid_argument("TransmonSpec: energies must be > 0");
  if (n_levels < 2) throw std::invalid_argument("TransmonSpec: need at least 2 levels");
  if (n_levels > 2 * charge_cutoff + 1) {
    throw std::invalid_argument("TransmonSpec: n_levels exceeds charge basis dimension");
  }
  if (e_j / e_c < 1.0) throw std::invalid_argument("TransmonSpec: requires E_J/E_C >= 1");
}

void PulseSpec::validate() const {
  if (g <= 0.0) throw std::invalid_argument("PulseSpec: g must be > 0");
  if (rise_time < 0.0) throw std::invalid_argument("PulseSpec: rise_time must be >= 0");
  if (total_area <= 0.0) throw std::invalid_argument("PulseSpec: total_area must be > 0");
  if (plateau_time() < 0.0) {
    throw std::invalid_argument("PulseSpec: pulse shorter than twice the rise time");
  }
}

double PulseSpec::envelope(double t) const {
  const double peak = g;
  const double total = duration();
  if (t <= 0.0 || t >= total) return 0.0;
  if (rise_time > 0.0 && t < rise_time) return peak * t / rise_time;
  if (rise_time > 0.0 && t > total - rise_time) return peak * (total - t) / rise_time;
  return peak;
}

SystemModel SystemModel::in_qubit_units() const {
  SystemModel out = *this;
  out.omega /= omega_q();
  return out;
}

SystemModel diagonalize_transmon(const TransmonSpec& spec) {
  spec.validate();
  const auto base = solve_charge_basis(spec.e_j, spec.e_c, spec.n_levels, spec.charge_cutoff);
  const auto check = solve_charge_basis(spec.e_j, spec.e_c, spec.n_levels, spec.charge_cutoff + 5);
  for (int n = 1; n < spec.n_levels; ++n) {
    if (std::abs(base.omega(n) - check.omega(n)) > 1e-9 * std::abs(check.omega(n))) {
      throw std::runtime_error("diagonalize_transmon: charge_cutoff too small for requested levels");
    }
  }
  SystemModel model;
  model.omega = base.omega;
  model.q_op = base.q_op;
  model.kind = ModelKind::Transmon;
  return model;
}

SystemModel ideal_qubit(double omega_q) {
  if (omega_q <= 0.0) throw std::invalid_argument("ideal_qubit: omega_q must be > 0");
  SystemModel model;
  model.omega = Eigen::Vector2d(0.0, omega_q);
  model.q_op = Eigen::Matrix2d{{0.0, 1.0}, {1.0, 0.0}};
  model.kind = ModelKind::IdealQubit;
  return model;
}

double relative_anharmonicity(const SystemModel& model) {
  if (model.levels() < 3) {
    throw std::invalid_argument("relative_anharmonicity: needs at least 3 levels");
  }
  return (model.omega(2) - model.omega(1)) / (model.omega(1) - model.omega(0)) - 1.0;
}

Eigen::MatrixXd coupling_operator(const SystemModel& model, bool normalized) {
  if (!normalized) return model.q_op;
  const double q01 = std::abs(model.q_op(0, 1));
  if (q01 == 0.0) throw std::runtime_error("coupling_operator: vanishing 0-1 matrix element");
  return model.q_op / q01;
}

double drive_coefficient(const SystemModel& model, const PulseSpec& pulse, double t) {
  return pulse.envelope(t) * std::cos(model.omega_q() * t);
}

Eigen::MatrixXd drive_term(const SystemModel& model, const PulseSpec& pulse, double t) {
  return drive_coefficient(model, pulse, t) * coupling_operator(model, true);
}

}  // namespace slnsim
