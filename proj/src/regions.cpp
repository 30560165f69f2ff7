#include "modeflow/regions.hpp"

#include <algorithm>
#include <cmath>

#include "modeflow/bounds.hpp"
#include "modeflow/thermo.hpp"

namespace modeflow::regions {

namespace {

void require_state(double p, double c) {
  if (!(p > 0.0 && p < 1.0)) {
    throw domain_error("region: p must lie strictly in (0, 1)");
  }
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw domain_error("region: c must be a non-negative magnitude");
  }
  if (c * c > p * (1.0 - p) + tol::psd) {
    throw domain_error("region: c exceeds the coherence cap sqrt(p (1 - p))");
  }
}

void require_thermal_weight(double p, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw domain_error("region: r must lie strictly in (0, 1)");
  }
  if (std::abs(p - r) <= tol::lorenz) {
    throw domain_error("region: boundary is singular at p = r (only q = p is reachable)");
  }
}

std::vector<double> population_grid(int grid) {
  if (grid < 2) {
    throw domain_error("region: grid needs at least two samples");
  }
  std::vector<double> qs(grid);
  const double step = (grid_high - grid_low) / (grid - 1);
  for (int k = 0; k < grid; ++k) qs[k] = grid_low + k * step;
  return qs;
}

}  // namespace

std::vector<BlochPoint> RegionBoundary::points() const {
  std::vector<BlochPoint> out;
  out.reserve(samples.size());
  for (const RegionSample& s : samples) {
    out.push_back({2.0 * s.coherence, 2.0 * s.q - 1.0});
  }
  return out;
}

const char* kind_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::symmetric: return "symmetric";
    case RegionKind::thermal: return "thermal";
    case RegionKind::guaranteed: return "guaranteed";
    case RegionKind::triangle: return "triangle";
  }
  return "unknown";
}

RegionBoundary symmetric_region(double p, double c, int grid) {
  require_state(p, c);
  RegionBoundary boundary;
  boundary.kind = RegionKind::symmetric;
  boundary.p = p;
  boundary.c = c;
  boundary.grid = grid;
  for (double q : population_grid(grid)) {
    boundary.samples.push_back({q, bounds::qubit_symmetric_bound(p, q, c)});
  }
  return boundary;
}

RegionBoundary thermal_region(double p, double c, double r, int grid) {
  require_state(p, c);
  require_thermal_weight(p, r);
  const double edge = thermo::extremal_incoherent(p, r);
  const double lo = std::min(p, edge) - tol::lorenz;
  const double hi = std::max(p, edge) + tol::lorenz;
  RegionBoundary boundary;
  boundary.kind = RegionKind::thermal;
  boundary.p = p;
  boundary.c = c;
  boundary.r = r;
  boundary.grid = grid;
  for (double q : population_grid(grid)) {
    if (q < lo || q > hi) continue;  // population not reachable at this temperature
    boundary.samples.push_back({q, bounds::qubit_thermal_bound(p, q, r, c)});
  }
  return boundary;
}

std::array<BlochPoint, 3> triangle_region(double p, double c, double r) {
  require_state(p, c);
  if (!(r > 0.0 && r < 1.0)) {
    throw domain_error("region: r must lie strictly in (0, 1)");
  }
  const double edge =
      std::abs(p - r) <= tol::lorenz ? p : thermo::extremal_incoherent(p, r);
  return {BlochPoint{2.0 * c, 2.0 * p - 1.0}, BlochPoint{0.0, 2.0 * p - 1.0},
          BlochPoint{0.0, 2.0 * edge - 1.0}};
}

RegionBoundary guaranteed_region(double p, double c, double r, int grid) {
  require_state(p, c);
  require_thermal_weight(p, r);
  const double edge = thermo::extremal_incoherent(p, r);
  const double lo = std::min(p, edge) - tol::lorenz;
  const double hi = std::max(p, edge) + tol::lorenz;
  RegionBoundary boundary;
  boundary.kind = RegionKind::guaranteed;
  boundary.p = p;
  boundary.c = c;
  boundary.r = r;
  boundary.grid = grid;
  for (double q : population_grid(grid)) {
    if (q < lo || q > hi) continue;
    boundary.samples.push_back({q, thermo::guaranteed_fraction(p, q, r) * c});
  }
  return boundary;
}

double ground_population_from_beta(const InverseTemperature& beta, double gap) {
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("ground_population_from_beta: gap must be positive");
  }
  if (beta.is_infinite()) return 1.0;
  return 1.0 / (1.0 + std::exp(-beta.value() * gap));
}

InverseTemperature beta_from_ground_population(double r, double gap) {
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("beta_from_ground_population: gap must be positive");
  }
  if (r == 1.0) return InverseTemperature::infinity();
  if (!(r >= 0.5 && r < 1.0)) {
    throw domain_error(
        "beta_from_ground_population: r must lie in [1/2, 1] for beta >= 0");
  }
  return InverseTemperature(std::log(r / (1.0 - r)) / gap);
}

}  // namespace modeflow::regions
