#include "modeflow/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace modeflow::qstate {

// ------------------------- InverseTemperature -------------------------

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw domain_error("InverseTemperature: beta must be >= 0 (or +infinity)");
  }
}

InverseTemperature InverseTemperature::infinity() {
  return InverseTemperature(std::numeric_limits<double>::infinity());
}

// ------------------------- HamiltonianSpec -------------------------

HamiltonianSpec::HamiltonianSpec(std::vector<double> energies)
    : energies_(std::move(energies)) {
  if (energies_.size() < 2) {
    throw domain_error("HamiltonianSpec: need at least two levels");
  }
  for (double e : energies_) {
    if (!std::isfinite(e)) {
      throw domain_error("HamiltonianSpec: energies must be finite");
    }
  }
  for (std::size_t i = 1; i < energies_.size(); ++i) {
    if (!(energies_[i] > energies_[i - 1])) {
      throw domain_error("HamiltonianSpec: energies must be strictly increasing");
    }
  }
}

bool HamiltonianSpec::same_spectrum(const HamiltonianSpec& other,
                                    double tolerance) const {
  if (dim() != other.dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (!nearly_equal(energies_[i], other.energies_[i], tolerance)) return false;
  }
  return true;
}

// ------------------------- DensityMatrix -------------------------

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw domain_error("DensityMatrix: matrix must be square and non-empty");
  }
  if (!rho_.allFinite()) {
    throw domain_error("DensityMatrix: entries must be finite");
  }
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermitian) {
    throw domain_error("DensityMatrix: not Hermitian within tolerance");
  }
  const double trace_gap = std::abs(rho_.trace() - Complex(1.0, 0.0));
  if (trace_gap > tol::trace) {
    throw domain_error("DensityMatrix: trace must be 1 within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw domain_error("DensityMatrix: eigenvalue check failed");
  }
  if (solver.eigenvalues().minCoeff() < -tol::psd) {
    throw domain_error("DensityMatrix: not positive semidefinite within tolerance");
  }
}

// ------------------------- ModeDecomposition -------------------------

ModeDecomposition::ModeDecomposition(std::vector<ModeComponent> components, int dim)
    : components_(std::move(components)), dim_(dim) {
  std::sort(components_.begin(), components_.end(),
            [](const ModeComponent& a, const ModeComponent& b) {
              return a.frequency < b.frequency;
            });
}

std::vector<double> ModeDecomposition::frequencies() const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.frequency);
  return out;
}

const Matrix* ModeDecomposition::find(double frequency) const {
  for (const auto& c : components_) {
    if (nearly_equal(c.frequency, frequency, tol::frequency)) return &c.component;
  }
  return nullptr;
}

Matrix ModeDecomposition::component_or_zero(double frequency) const {
  if (const Matrix* m = find(frequency)) return *m;
  return Matrix::Zero(dim_, dim_);
}

double ModeDecomposition::l1(double frequency) const {
  const Matrix* m = find(frequency);
  if (m == nullptr) return 0.0;
  return m->cwiseAbs().sum();
}

Matrix ModeDecomposition::reconstruct() const {
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const auto& c : components_) sum += c.component;
  return sum;
}

// ------------------------- operations -------------------------

DensityMatrix gibbs_state(const HamiltonianSpec& h, const InverseTemperature& beta) {
  const int d = h.dim();
  Matrix rho = Matrix::Zero(d, d);
  if (beta.is_infinite()) {
    rho(0, 0) = 1.0;  // unique ground level: spectrum is strictly increasing
    return DensityMatrix(rho);
  }
  // Weights are shifted by the ground energy so large beta cannot underflow
  // the whole vector at once.
  std::vector<double> w(d);
  double z = 0.0;
  for (int n = 0; n < d; ++n) {
    w[n] = std::exp(-beta.value() * (h.energy(n) - h.energy(0)));
    z += w[n];
  }
  for (int n = 0; n < d; ++n) rho(n, n) = w[n] / z;
  return DensityMatrix(rho);
}

ModeDecomposition mode_decompose(const Matrix& op, const HamiltonianSpec& h) {
  if (op.rows() != op.cols() || op.rows() != h.dim()) {
    throw domain_error("mode_decompose: operator and Hamiltonian dimensions differ");
  }
  const int d = h.dim();
  std::vector<ModeComponent> buckets;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const double omega = h.frequency(n, m);
      ModeComponent* bucket = nullptr;
      for (auto& b : buckets) {
        if (nearly_equal(b.frequency, omega, tol::frequency)) {
          bucket = &b;
          break;
        }
      }
      if (bucket == nullptr) {
        buckets.push_back({omega, Matrix::Zero(d, d)});
        bucket = &buckets.back();
      }
      bucket->component(n, m) = op(n, m);
    }
  }
  return ModeDecomposition(std::move(buckets), d);
}

ModeDecomposition mode_decompose(const DensityMatrix& rho, const HamiltonianSpec& h) {
  return mode_decompose(rho.matrix(), h);
}

double mode_l1(const DensityMatrix& rho, const HamiltonianSpec& h, double frequency) {
  return mode_decompose(rho, h).l1(frequency);
}

Matrix time_translate(const Matrix& op, const HamiltonianSpec& h, double t) {
  if (op.rows() != op.cols() || op.rows() != h.dim()) {
    throw domain_error("time_translate: operator and Hamiltonian dimensions differ");
  }
  if (!std::isfinite(t)) {
    throw domain_error("time_translate: time must be finite");
  }
  const int d = h.dim();
  Eigen::VectorXcd phases(d);
  for (int n = 0; n < d; ++n) {
    phases(n) = std::exp(Complex(0.0, -h.energy(n) * t));
  }
  return phases.asDiagonal() * op * phases.conjugate().asDiagonal();
}

DensityMatrix time_translate(const DensityMatrix& rho, const HamiltonianSpec& h,
                             double t) {
  return DensityMatrix(time_translate(rho.matrix(), h, t));
}

DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpec& h) {
  if (rho.dim() != h.dim()) {
    throw domain_error("dephase: state and Hamiltonian dimensions differ");
  }
  Matrix diag = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix(diag);
}

}  // namespace modeflow::qstate
