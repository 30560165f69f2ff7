#pragma once
// Achievable-region boundaries for a qubit in Bloch coordinates: which
// (population, coherence) pairs a processed state can still reach, for each
// class of processing, sampled on a fixed population grid.

#include <array>
#include <limits>
#include <vector>

#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"

namespace modeflow::regions {

using qstate::InverseTemperature;

// Bloch-disc coordinates: x = 2 * coherence, z = 2 * ground population - 1,
// so the ground state sits at z = +1.
struct BlochPoint {
  double x = 0.0;
  double z = 0.0;
};

enum class RegionKind { symmetric, thermal, guaranteed, triangle };

// One boundary sample: maximal (or guaranteed) coherence at ground
// population q.
struct RegionSample {
  double q = 0.0;
  double coherence = 0.0;
};

// Boundary of one region, samples ascending in q.  `r` is NaN when
// temperature plays no role in the construction.
struct RegionBoundary {
  RegionKind kind = RegionKind::symmetric;
  double p = 0.0;
  double c = 0.0;
  double r = std::numeric_limits<double>::quiet_NaN();
  int grid = 0;
  std::vector<RegionSample> samples;

  // Upper (+x) branch of the boundary; the region is mirror-symmetric in x.
  std::vector<BlochPoint> points() const;
};

inline constexpr int default_grid = 201;
inline constexpr double grid_low = 0.005;
inline constexpr double grid_high = 0.995;

const char* kind_name(RegionKind kind);

// Largest coherence at each q when only the population map is constrained.
RegionBoundary symmetric_region(double p, double c, int grid = default_grid);

// Largest coherence at each reachable q under the thermal constraint at
// ground thermal weight r; unreachable grid populations are omitted.
RegionBoundary thermal_region(double p, double c, double r, int grid = default_grid);

// Vertices of the always-achievable triangle: the state itself, its dephased
// version, and the farthest reachable incoherent state.
std::array<BlochPoint, 3> triangle_region(double p, double c, double r);

// Coherence guaranteed to survive at each reachable q (lower bound).
RegionBoundary guaranteed_region(double p, double c, double r, int grid = default_grid);

// Thermal ground weight of a qubit with the given gap, and back.
double ground_population_from_beta(const InverseTemperature& beta, double gap);
InverseTemperature beta_from_ground_population(double r, double gap);

}  // namespace modeflow::regions
