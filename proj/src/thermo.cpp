#include "modeflow/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace modeflow::thermo {

namespace {

void require_finite_beta(const InverseTemperature& beta, const char* where) {
  if (beta.is_infinite()) {
    throw domain_error(std::string(where) +
                       ": needs finite beta (rescaled weights degenerate at T = 0)");
  }
}

void require_same_ladder(const EnergyDistribution& a, const EnergyDistribution& b,
                         const char* where) {
  if (!a.hamiltonian().same_spectrum(b.hamiltonian())) {
    throw domain_error(std::string(where) + ": distributions live on different ladders");
  }
}

void require_open_unit(double value, const char* what) {
  if (!(value > 0.0 && value < 1.0)) {
    throw domain_error(std::string(what) + " must lie strictly in (0, 1)");
  }
}

}  // namespace

// ------------------------- EnergyDistribution -------------------------

EnergyDistribution::EnergyDistribution(std::vector<double> probabilities,
                                       HamiltonianSpec hamiltonian)
    : probabilities_(std::move(probabilities)), hamiltonian_(std::move(hamiltonian)) {
  if (static_cast<int>(probabilities_.size()) != hamiltonian_.dim()) {
    throw domain_error("EnergyDistribution: probability count must match the ladder");
  }
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < -tol::stochastic_entry) {
      throw domain_error("EnergyDistribution: probabilities must be non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::distribution_sum) {
    throw domain_error("EnergyDistribution: probabilities must sum to 1");
  }
}

// ------------------------- rescaled sorting -------------------------

std::vector<int> beta_order(const EnergyDistribution& dist,
                            const InverseTemperature& beta) {
  require_finite_beta(beta, "beta_order");
  const int d = dist.dim();
  // Work with log keys so large beta cannot overflow, and quantize so that
  // analytically tied keys (e.g. a thermal input) really compare equal.
  std::vector<double> key(d);
  for (int i = 0; i < d; ++i) {
    const double p = dist.prob(i);
    if (p <= 0.0) {
      key[i] = -std::numeric_limits<double>::infinity();
    } else {
      const double raw = std::log(p) + beta.value() * dist.hamiltonian().energy(i);
      key[i] = std::round(raw * 1e12) / 1e12;
    }
  }
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&key](int a, int b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return a < b;  // ties toward ascending energy
  });
  return order;
}

LorenzCurve lorenz_curve(const EnergyDistribution& dist,
                         const InverseTemperature& beta) {
  require_finite_beta(beta, "lorenz_curve");
  const auto order = beta_order(dist, beta);
  const HamiltonianSpec& h = dist.hamiltonian();
  const int d = dist.dim();
  std::vector<double> weight(d);
  double z = 0.0;
  for (int i = 0; i < d; ++i) {
    weight[i] = std::exp(-beta.value() * (h.energy(i) - h.energy(0)));
    z += weight[i];
  }
  LorenzCurve curve;
  curve.x.reserve(d + 1);
  curve.y.reserve(d + 1);
  curve.x.push_back(0.0);
  curve.y.push_back(0.0);
  double cx = 0.0;
  double cy = 0.0;
  for (int i : order) {
    cx += weight[i] / z;
    cy += dist.prob(i);
    curve.x.push_back(cx);
    curve.y.push_back(cy);
  }
  curve.x.back() = 1.0;  // guard the endpoint against accumulated rounding
  return curve;
}

double LorenzCurve::value_at(double position) const {
  if (position <= x.front()) return y.front();
  if (position >= x.back()) return y.back();
  const auto upper = std::upper_bound(x.begin(), x.end(), position);
  const std::size_t hi = static_cast<std::size_t>(upper - x.begin());
  const std::size_t lo = hi - 1;
  const double span = x[hi] - x[lo];
  if (span <= 0.0) return std::max(y[lo], y[hi]);
  const double t = (position - x[lo]) / span;
  return y[lo] + t * (y[hi] - y[lo]);
}

bool thermomajorizes(const EnergyDistribution& from, const EnergyDistribution& to,
                     const InverseTemperature& beta) {
  require_same_ladder(from, to, "thermomajorizes");
  const LorenzCurve upper = lorenz_curve(from, beta);
  const LorenzCurve lower = lorenz_curve(to, beta);
  // Piecewise-linear curves: checking the union of breakpoints is exact.
  for (double position : upper.x) {
    if (lower.value_at(position) > upper.value_at(position) + tol::lorenz) return false;
  }
  for (double position : lower.x) {
    if (lower.value_at(position) > upper.value_at(position) + tol::lorenz) return false;
  }
  return true;
}

// ------------------------- transition cap -------------------------

double transition_bound(const HamiltonianSpec& h, const InverseTemperature& beta,
                        int from_level, int to_level) {
  if (from_level < 0 || from_level >= h.dim() || to_level < 0 || to_level >= h.dim()) {
    throw domain_error("transition_bound: level index out of range");
  }
  if (from_level == to_level) return 1.0;
  const double drop = h.frequency(from_level, to_level);  // positive when going down
  if (beta.is_infinite()) return drop > 0.0 ? 1.0 : 0.0;
  return std::min(1.0, std::exp(beta.value() * drop));
}

// ------------------------- qubit closed forms -------------------------

double extremal_incoherent(double p, double r) {
  require_open_unit(p, "extremal_incoherent: p");
  require_open_unit(r, "extremal_incoherent: r");
  // The reachable window around the thermal point has its far edge where the
  // population map hits the boundary of stochasticity; which constraint binds
  // first depends on which side of 1/2 the thermal weight sits.
  if (r >= 0.5) return 1.0 - (1.0 - r) / r * p;
  return r / (1.0 - r) * (1.0 - p);
}

double guaranteed_fraction(double p, double q, double r) {
  require_open_unit(p, "guaranteed_fraction: p");
  require_open_unit(r, "guaranteed_fraction: r");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw domain_error("guaranteed_fraction: q must lie in [0, 1]");
  }
  const double edge = extremal_incoherent(p, r);
  const double lo = std::min(p, edge) - tol::lorenz;
  const double hi = std::max(p, edge) + tol::lorenz;
  if (q < lo || q > hi) {
    throw domain_error("guaranteed_fraction: target population is not reachable");
  }
  if (std::abs(p - edge) <= tol::lorenz) return 1.0;  // thermal fixed point
  const double fraction = (q - edge) / (p - edge);
  return std::clamp(fraction, 0.0, 1.0);
}

// ------------------------- general-dimension search -------------------------

double guaranteed_fraction_search(const EnergyDistribution& from,
                                  const EnergyDistribution& to,
                                  const InverseTemperature& beta) {
  require_same_ladder(from, to, "guaranteed_fraction_search");
  if (!thermomajorizes(from, to, beta)) {
    throw domain_error("guaranteed_fraction_search: target is not reachable");
  }
  const int d = from.dim();
  double gap = 0.0;
  for (int i = 0; i < d; ++i) gap = std::max(gap, std::abs(from.prob(i) - to.prob(i)));
  if (gap <= tol::lorenz) return 1.0;

  // residual(lambda) = (to - lambda from) / (1 - lambda) must itself be a
  // reachable distribution; feasibility is an interval containing lambda = 0.
  const auto feasible = [&](double lambda) {
    std::vector<double> residual(d);
    for (int i = 0; i < d; ++i) {
      residual[i] = (to.prob(i) - lambda * from.prob(i)) / (1.0 - lambda);
      if (residual[i] < -tol::stochastic_entry) return false;
      residual[i] = std::max(residual[i], 0.0);
    }
    const EnergyDistribution xi(residual, from.hamiltonian());
    return thermomajorizes(from, xi, beta);
  };

  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol::bisection) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

// ------------------------- guaranteed-coherence state -------------------------

DensityMatrix guaranteed_state(const DensityMatrix& rho, const HamiltonianSpec& h,
                               const InverseTemperature& beta,
                               const std::vector<double>& target_populations) {
  if (h.dim() != 2 || rho.dim() != 2) {
    throw domain_error("guaranteed_state: closed form is qubit-only");
  }
  if (target_populations.size() != 2) {
    throw domain_error("guaranteed_state: need two target populations");
  }
  require_finite_beta(beta, "guaranteed_state");
  const double p = rho.entry(0, 0).real();
  const double q = target_populations[0];
  const EnergyDistribution start({p, 1.0 - p}, h);
  const EnergyDistribution target(target_populations, h);
  if (!thermomajorizes(start, target, beta)) {
    throw domain_error("guaranteed_state: target populations are not reachable");
  }
  const double gap = h.energy(1) - h.energy(0);
  const double r = 1.0 / (1.0 + std::exp(-beta.value() * gap));
  const double edge = extremal_incoherent(p, r);
  const double fraction =
      std::abs(p - edge) <= tol::lorenz ? 1.0 : std::clamp((q - edge) / (p - edge), 0.0, 1.0);
  Matrix incoherent_edge = Matrix::Zero(2, 2);
  incoherent_edge(0, 0) = edge;
  incoherent_edge(1, 1) = 1.0 - edge;
  Matrix sigma = fraction * rho.matrix() + (1.0 - fraction) * incoherent_edge;
  return DensityMatrix(sigma);
}

}  // namespace modeflow::thermo
