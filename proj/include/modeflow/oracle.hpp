#pragma once
// Independent evidence generators: seeded random channels of each class built
// from first principles (energy-preserving dilations), saturation checks that
// drive the explicit constructions against the bounds, and reproducible
// property sweeps with persisted failure seeds.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modeflow/channels.hpp"
#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"

namespace modeflow::oracle {

using channels::KrausChannel;
using channels::ShiftDirection;
using qstate::HamiltonianSpec;
using qstate::InverseTemperature;

// ------------------------- raw random draws -------------------------

// Ladder with gaps uniform in [0.3, 1.7] starting at 0 (generic, non-equidistant).
HamiltonianSpec random_hamiltonian(int dim, std::mt19937_64& gen);

// Full-rank random state from a complex Gaussian square root.
qstate::DensityMatrix random_state(int dim, std::mt19937_64& gen);

// ------------------------- random channels -------------------------

// Covariant channel: Haar-random unitary inside each degenerate total-energy
// block of system + finite environment, environment prepared diagonal with
// random populations, then traced out.
KrausChannel random_symmetric_channel(const HamiltonianSpec& h, std::uint64_t seed);

// Same dilation with the environment prepared thermal at `beta` on a ladder
// chosen to resonate with the system gaps, so the result is a genuine
// thermal-equilibrium-preserving covariant channel.
KrausChannel random_thermal_channel(const HamiltonianSpec& h,
                                    const InverseTemperature& beta, int bath_levels,
                                    std::uint64_t seed);

// ------------------------- saturation -------------------------

struct SaturationReport {
  std::string bound_id;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  double achieved = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

// Drives the explicit channel construction named by `bound_id` against its
// bound.  Known ids: shift_down, shift_up, merge_symmetric, qubit_symmetric,
// qubit_thermal.  Missing params take the documented defaults.
SaturationReport verify_saturation(const std::string& bound_id,
                                   std::map<std::string, double> params,
                                   double tolerance);

// All five saturation checks with default parameters.
std::vector<SaturationReport> saturation_suite();

struct ConvergencePoint {
  int bath_levels = 0;
  double achieved = 0.0;   // measured coherence multiplier
  double limit_gap = 0.0;  // distance to the infinite-bath value
};

// Coherence transfer of the shift construction as the bath grows.
std::vector<ConvergencePoint> bath_convergence_study(ShiftDirection direction,
                                                     const InverseTemperature& beta,
                                                     double gap,
                                                     const std::vector<int>& bath_levels);

// Largest coherence multiplier among completely positive covariant qubit maps
// with fixed population behaviour, found by bisecting the positivity of the
// process matrix (independent of the closed form).
double max_coherence_fixed_stochastic(double stay_ground, double stay_excited,
                                      double tolerance = tol::bisection);

// Kraus operators of the covariant qubit map with the given population
// behaviour and coherence multiplier (must be completely positive).
std::vector<Matrix> covariant_qubit_kraus(double stay_ground, double stay_excited,
                                          double multiplier);

// ------------------------- reproducible sweeps -------------------------

struct SweepFailure {
  std::uint64_t seed = 0;
  std::string what;
  double violation = 0.0;
};

struct SweepReport {
  std::string suite;
  int samples = 0;
  int failures = 0;
  double worst = 0.0;  // largest observed violation (negative = slack to spare)
  std::vector<SweepFailure> failing;  // first few, for reproduction
  bool pass = false;
};

// Mode-magnitude monotonicity of random covariant channels.
SweepReport monotone_sweep(int samples, std::uint64_t seed0);

// Output coherences of random thermal channels against all three bounds.
SweepReport dominance_sweep(int samples, std::uint64_t seed0);

// Induced transition probabilities against the detailed-balance cap.
SweepReport transition_sweep(int samples, std::uint64_t seed0);

// Curve test against the qubit window closed form on a population grid.
SweepReport qubit_equivalence_sweep(int p_grid, int q_grid,
                                    const std::vector<double>& thermal_weights);

// Worker count honouring MODEFLOW_THREADS (0 or unset = hardware).
int thread_budget();

}  // namespace modeflow::oracle
