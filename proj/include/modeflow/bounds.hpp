#pragma once
// Upper bounds on how much coherence a processed state can retain at a given
// output entry, from the loosest (any trace-preserving map with a known
// level-transition matrix) to the tightest (thermal qubit closed form).

#include <optional>

#include "modeflow/channels.hpp"
#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"

namespace modeflow::bounds {

using channels::ShiftDirection;
using channels::StochasticMatrix;
using qstate::DensityMatrix;
using qstate::HamiltonianSpec;
using qstate::InverseTemperature;

// One bound evaluation: input state and ladder, the transition matrix and/or
// temperature the bound needs, and the target output entry (row, col).
// Bounds return raw values; they can exceed physical coherence caps.
struct BoundQuery {
  DensityMatrix rho;
  HamiltonianSpec hamiltonian;
  std::optional<StochasticMatrix> transition;
  std::optional<InverseTemperature> beta;
  int row = 0;
  int col = 0;
};

// sum_{c,d} |rho_cd| sqrt(p(row|c) p(col|d)) over all input pairs.
double cptp_bound(const BoundQuery& query);

// Same sum restricted to input pairs on the target entry's Bohr frequency.
double symmetric_bound(const BoundQuery& query);

// Frequency-restricted sum with thermal damping e^{-beta (omega_row - omega_c)}
// on terms entering from below the target row; no transition matrix needed.
double thermal_bound(const BoundQuery& query);

// Cap on the merged lower-gap coherence from gap coherences (a, b).
double merge_bound_symmetric(double a, double b);
double merge_bound_thermal(double a, double b, const InverseTemperature& beta,
                           double gap, ShiftDirection direction);

// Qubit closed forms for initial ground population p, coherence c, target
// population q (and thermal ground weight r for the thermal version).
double qubit_symmetric_bound(double p, double q, double c);
double qubit_thermal_bound(double p, double q, double r, double c);

// The unique thermal-weight-preserving qubit transition matrix sending ground
// population p to q; throws when the triple is infeasible or p = r.
StochasticMatrix qubit_fixed_stochastic(double p, double q, double r);

}  // namespace modeflow::bounds
