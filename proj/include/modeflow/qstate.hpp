#pragma once
// Non-degenerate energy ladders, validated density matrices, and the split of
// an operator into its fixed-frequency components under the free evolution.

#include <vector>

#include "modeflow/common.hpp"

namespace modeflow::qstate {

// Inverse temperature of the reference bath.  Non-negative; +infinity selects
// the zero-temperature (ground-state) bath.
class InverseTemperature {
 public:
  explicit InverseTemperature(double beta);
  static InverseTemperature infinity();
  double value() const { return beta_; }
  bool is_infinite() const { return std::isinf(beta_); }

 private:
  double beta_;
};

// Energy eigenvalues of a finite non-degenerate Hamiltonian,
// strictly increasing, dimension >= 2.
class HamiltonianSpec {
 public:
  explicit HamiltonianSpec(std::vector<double> energies);
  int dim() const { return static_cast<int>(energies_.size()); }
  double energy(int level) const { return energies_.at(level); }
  const std::vector<double>& energies() const { return energies_; }
  // Bohr frequency omega_n - omega_m attached to the (n, m) matrix entry.
  double frequency(int n, int m) const { return energies_.at(n) - energies_.at(m); }
  bool same_spectrum(const HamiltonianSpec& other,
                     double tolerance = tol::frequency) const;

 private:
  std::vector<double> energies_;
};

// Hermitian, unit-trace, positive-semidefinite matrix written in the energy
// eigenbasis.  Invariants are enforced at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho);
  int dim() const { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }
  Complex entry(int n, int m) const { return rho_(n, m); }

 private:
  Matrix rho_;
};

// One fixed-frequency component: the entries (n, m) whose Bohr frequency
// equals `frequency` within the bucketing tolerance, zero elsewhere.
struct ModeComponent {
  double frequency = 0.0;
  Matrix component;
};

// Operator split by Bohr frequency.  Every matrix entry lands in exactly one
// bucket, so summing the components reproduces the operator bit for bit.
class ModeDecomposition {
 public:
  ModeDecomposition(std::vector<ModeComponent> components, int dim);

  int dim() const { return dim_; }
  const std::vector<ModeComponent>& components() const { return components_; }
  std::vector<double> frequencies() const;

  // nullptr when no component sits within the tolerance of `frequency`.
  const Matrix* find(double frequency) const;
  Matrix component_or_zero(double frequency) const;

  // Sum of entry magnitudes in one component; 0 for an absent frequency.
  double l1(double frequency) const;

  Matrix reconstruct() const;

 private:
  std::vector<ModeComponent> components_;  // sorted by ascending frequency
  int dim_;
};

// Thermal state of `h` at inverse temperature `beta` (diagonal Gibbs weights;
// the ground-state projector at beta = +infinity).
DensityMatrix gibbs_state(const HamiltonianSpec& h, const InverseTemperature& beta);

ModeDecomposition mode_decompose(const Matrix& op, const HamiltonianSpec& h);
ModeDecomposition mode_decompose(const DensityMatrix& rho, const HamiltonianSpec& h);

double mode_l1(const DensityMatrix& rho, const HamiltonianSpec& h, double frequency);

// Free evolution for time t: entry (n, m) picks up exp(-i (omega_n - omega_m) t).
Matrix time_translate(const Matrix& op, const HamiltonianSpec& h, double t);
DensityMatrix time_translate(const DensityMatrix& rho, const HamiltonianSpec& h, double t);

// Projection onto the zero-frequency component (the diagonal, since the
// spectrum is non-degenerate).
DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpec& h);

}  // namespace modeflow::qstate
