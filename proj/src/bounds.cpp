#include "modeflow/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace modeflow::bounds {

namespace {

void require_target(const BoundQuery& query) {
  const int d = query.hamiltonian.dim();
  if (query.rho.dim() != d) {
    throw domain_error("bound: state and Hamiltonian dimensions differ");
  }
  if (query.row < 0 || query.col < 0 || query.row >= d || query.col >= d) {
    throw domain_error("bound: target entry out of range");
  }
}

const StochasticMatrix& require_transition(const BoundQuery& query) {
  if (!query.transition.has_value()) {
    throw domain_error("bound: level-transition matrix required");
  }
  if (query.transition->input_dim() != query.hamiltonian.dim() ||
      query.transition->output_dim() != query.hamiltonian.dim()) {
    throw domain_error("bound: transition matrix dimension mismatch");
  }
  return *query.transition;
}

const InverseTemperature& require_beta(const BoundQuery& query) {
  if (!query.beta.has_value()) {
    throw domain_error("bound: inverse temperature required");
  }
  return *query.beta;
}

void require_open_unit(double value, const char* what) {
  if (!(value > 0.0 && value < 1.0)) {
    throw domain_error(std::string(what) + " must lie strictly in (0, 1)");
  }
}

void require_magnitude(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw domain_error(std::string(what) + " must be a non-negative magnitude");
  }
}

}  // namespace

double cptp_bound(const BoundQuery& query) {
  require_target(query);
  const StochasticMatrix& p = require_transition(query);
  const int d = query.hamiltonian.dim();
  double bound = 0.0;
  for (int c = 0; c < d; ++c) {
    for (int e = 0; e < d; ++e) {
      bound += std::abs(query.rho.entry(c, e)) *
               std::sqrt(std::max(p.prob(query.row, c), 0.0) *
                         std::max(p.prob(query.col, e), 0.0));
    }
  }
  return bound;
}

double symmetric_bound(const BoundQuery& query) {
  require_target(query);
  const StochasticMatrix& p = require_transition(query);
  const HamiltonianSpec& h = query.hamiltonian;
  const double omega = h.frequency(query.row, query.col);
  const int d = h.dim();
  double bound = 0.0;
  for (int c = 0; c < d; ++c) {
    for (int e = 0; e < d; ++e) {
      if (!nearly_equal(h.frequency(c, e), omega, tol::frequency)) continue;
      bound += std::abs(query.rho.entry(c, e)) *
               std::sqrt(std::max(p.prob(query.row, c), 0.0) *
                         std::max(p.prob(query.col, e), 0.0));
    }
  }
  return bound;
}

double thermal_bound(const BoundQuery& query) {
  require_target(query);
  const InverseTemperature& beta = require_beta(query);
  const HamiltonianSpec& h = query.hamiltonian;
  const double omega = h.frequency(query.row, query.col);
  const int d = h.dim();
  double bound = 0.0;
  for (int c = 0; c < d; ++c) {
    for (int e = 0; e < d; ++e) {
      if (!nearly_equal(h.frequency(c, e), omega, tol::frequency)) continue;
      const double magnitude = std::abs(query.rho.entry(c, e));
      const double climb = h.frequency(query.row, c);  // energy gained moving c -> row
      if (climb <= tol::frequency) {
        bound += magnitude;  // entering from above: undamped
      } else if (beta.is_infinite()) {
        continue;  // zero-temperature bath kills upward transfer
      } else {
        bound += magnitude * std::exp(-beta.value() * climb);
      }
    }
  }
  return bound;
}

double merge_bound_symmetric(double a, double b) {
  require_magnitude(a, "merge bound: a");
  require_magnitude(b, "merge bound: b");
  return std::hypot(a, b);
}

double merge_bound_thermal(double a, double b, const InverseTemperature& beta,
                           double gap, ShiftDirection direction) {
  require_magnitude(a, "merge bound: a");
  require_magnitude(b, "merge bound: b");
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("merge bound: gap must be positive and finite");
  }
  if (direction == ShiftDirection::down) return std::hypot(a, b);
  const double damp = beta.is_infinite() ? 0.0 : std::exp(-beta.value() * gap);
  return std::sqrt(damp * a * a + b * b);
}

double qubit_symmetric_bound(double p, double q, double c) {
  require_open_unit(p, "qubit symmetric bound: p");
  require_open_unit(q, "qubit symmetric bound: q");
  require_magnitude(c, "qubit symmetric bound: c");
  const double alpha = std::min(q / p, (1.0 - q) / (1.0 - p));
  return c * std::sqrt(alpha);
}

StochasticMatrix qubit_fixed_stochastic(double p, double q, double r) {
  require_open_unit(p, "qubit transition matrix: p");
  require_open_unit(r, "qubit transition matrix: r");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw domain_error("qubit transition matrix: q must lie in [0, 1]");
  }
  if (std::abs(p - r) <= tol::lorenz) {
    throw domain_error("qubit transition matrix: singular at p = r");
  }
  const double stay_ground = (q * (1.0 - r) - r * (1.0 - p)) / (p - r);
  const double stay_excited = (r * (1.0 - q) - p * (1.0 - r)) / (r - p);
  const double slack = tol::stochastic_entry;
  if (stay_ground < -slack || stay_ground > 1.0 + slack || stay_excited < -slack ||
      stay_excited > 1.0 + slack) {
    throw domain_error("qubit transition matrix: (p, q, r) is not reachable");
  }
  Eigen::MatrixXd m(2, 2);
  m(0, 0) = std::clamp(stay_ground, 0.0, 1.0);
  m(1, 0) = 1.0 - m(0, 0);
  m(1, 1) = std::clamp(stay_excited, 0.0, 1.0);
  m(0, 1) = 1.0 - m(1, 1);
  return StochasticMatrix(std::move(m));
}

double qubit_thermal_bound(double p, double q, double r, double c) {
  require_magnitude(c, "qubit thermal bound: c");
  const StochasticMatrix transition = qubit_fixed_stochastic(p, q, r);
  return c * std::sqrt(transition.prob(0, 0) * transition.prob(1, 1));
}

}  // namespace modeflow::bounds
