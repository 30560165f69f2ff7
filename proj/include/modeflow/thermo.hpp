#pragma once
// Population-level reachability under thermal constraints: rescaled
// majorization curves, the induced partial order, per-transition probability
// caps, and the guaranteed-coherence construction built on top of them.

#include <vector>

#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"

namespace modeflow::thermo {

using qstate::DensityMatrix;
using qstate::HamiltonianSpec;
using qstate::InverseTemperature;

// Probability vector attached to the levels of a ladder.
class EnergyDistribution {
 public:
  EnergyDistribution(std::vector<double> probabilities, HamiltonianSpec hamiltonian);
  int dim() const { return static_cast<int>(probabilities_.size()); }
  double prob(int level) const { return probabilities_.at(level); }
  const std::vector<double>& probabilities() const { return probabilities_; }
  const HamiltonianSpec& hamiltonian() const { return hamiltonian_; }

 private:
  std::vector<double> probabilities_;
  HamiltonianSpec hamiltonian_;
};

// Piecewise-linear concave curve through (0,0) .. (1,1): x accumulates
// normalized thermal weights, y accumulates probabilities, both in the
// rescaled sorting order.
struct LorenzCurve {
  std::vector<double> x;
  std::vector<double> y;
  double value_at(double position) const;  // linear interpolation
};

// Permutation sorting levels by p_i e^{beta omega_i} descending, ties broken
// toward ascending energy.  Requires finite beta.
std::vector<int> beta_order(const EnergyDistribution& dist,
                            const InverseTemperature& beta);

LorenzCurve lorenz_curve(const EnergyDistribution& dist,
                         const InverseTemperature& beta);

// True when `from` can reach `to` through a thermal-constraint-respecting
// population map: curve(from) dominates curve(to) at every breakpoint.
bool thermomajorizes(const EnergyDistribution& from, const EnergyDistribution& to,
                     const InverseTemperature& beta);

// Upper cap on the transition probability from `from_level` to `to_level`:
// min(1, e^{beta (omega_from - omega_to)}).
double transition_bound(const HamiltonianSpec& h, const InverseTemperature& beta,
                        int from_level, int to_level);

// Qubit: farthest ground population reachable from p past the thermal point
// r.  The reachable window is exactly [min(p, result), max(p, result)].
double extremal_incoherent(double p, double r);

// Qubit: largest fraction of the initial state that survives inside any
// decomposition sigma = lambda rho + (1 - lambda) xi over incoherent
// reachable xi, given final ground population q.
double guaranteed_fraction(double p, double q, double r);

// Same quantity in general dimension, found by bisecting along the line
// through the initial and target populations.
double guaranteed_fraction_search(const EnergyDistribution& from,
                                  const EnergyDistribution& to,
                                  const InverseTemperature& beta);

// Qubit state with target populations whose every coherence mode retains the
// guaranteed fraction of the input.
DensityMatrix guaranteed_state(const DensityMatrix& rho, const HamiltonianSpec& h,
                               const InverseTemperature& beta,
                               const std::vector<double>& target_populations);

}  // namespace modeflow::thermo
