#include "modeflow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "modeflow/bounds.hpp"
#include "modeflow/thermo.hpp"

namespace modeflow::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// Haar-random unitary supported on the degenerate blocks of `totals`:
// identity-permutation scatter of an independent Haar factor per block,
// a uniformly random phase on singleton blocks.
Matrix block_random_unitary(const std::vector<double>& totals, std::mt19937_64& gen) {
  const int n = static_cast<int>(totals.size());
  Matrix u = Matrix::Zero(n, n);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<int> block;
    for (int j = i; j < n; ++j) {
      if (!used[j] && std::abs(totals[j] - totals[i]) <= tol::frequency) {
        block.push_back(j);
        used[j] = 1;
      }
    }
    const int k = static_cast<int>(block.size());
    if (k == 1) {
      u(i, i) = std::polar(1.0, 2.0 * M_PI * uniform01(gen));
      continue;
    }
    Matrix g(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) g(r, c) = complex_gaussian(gen);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(k, k);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < k; ++c) {
      const double mag = std::abs(r(c, c));
      if (mag > 0.0) q.col(c) *= r(c, c) / mag;
    }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) u(block[a], block[b]) = q(a, b);
  }
  return u;
}

// Kraus operators of tracing the environment out of `u` acting on
// system (x) diagonal environment with populations `env_weights`.
std::vector<Matrix> dilation_kraus(const Matrix& u, int sys_dim, int env_dim,
                                   const std::vector<double>& env_weights) {
  std::vector<Matrix> ops;
  for (int a = 0; a < env_dim; ++a) {
    if (env_weights[a] <= 0.0) continue;
    const double amp = std::sqrt(env_weights[a]);
    for (int b = 0; b < env_dim; ++b) {
      Matrix w(sys_dim, sys_dim);
      for (int out = 0; out < sys_dim; ++out)
        for (int in = 0; in < sys_dim; ++in)
          w(out, in) = amp * u(out * env_dim + b, in * env_dim + a);
      if (w.squaredNorm() > 1e-28) ops.push_back(std::move(w));
    }
  }
  return ops;
}

// Mirrored copy of the system spectrum: the environment gap set equals the
// system gap set, so every system transition finds a degenerate partner.
std::vector<double> mirrored_spectrum(const HamiltonianSpec& h) {
  const int d = h.dim();
  std::vector<double> env(d);
  const double top = h.energy(d - 1);
  for (int b = 0; b < d; ++b) env[b] = top - h.energy(d - 1 - b);
  return env;
}

std::vector<double> joint_totals(const HamiltonianSpec& h, const std::vector<double>& env) {
  const int d = h.dim();
  const int levels = static_cast<int>(env.size());
  std::vector<double> totals(static_cast<std::size_t>(d) * levels);
  for (int s = 0; s < d; ++s)
    for (int b = 0; b < levels; ++b) totals[s * levels + b] = h.energy(s) + env[b];
  return totals;
}

Matrix covariant_qubit_choi(double stay_ground, double stay_excited, double multiplier) {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = stay_ground;
  c(2, 2) = 1.0 - stay_ground;
  c(1, 1) = 1.0 - stay_excited;
  c(3, 3) = stay_excited;
  c(0, 3) = multiplier;
  c(3, 0) = multiplier;
  return c;
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void require_probability(double v, const char* name) {
  if (!std::isfinite(v) || v < -tol::stochastic_entry || v > 1.0 + tol::stochastic_entry)
    throw domain_error(std::string(name) + " must lie in [0, 1]");
}

// Deterministic work split: slot i always computes the same result, whatever
// the thread count, so sweeps reproduce bit for bit.
void parallel_for(int total, const std::function<void(int)>& body) {
  const int workers = std::min(thread_budget(), total);
  if (workers <= 1) {
    for (int i = 0; i < total; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= total) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Shared sweep runner: per-sample violations land in fixed slots, then get
// aggregated in index order.
SweepReport run_sweep(std::string suite, int samples, std::uint64_t seed0,
                      const std::function<double(std::uint64_t, std::string&)>& body) {
  if (samples <= 0) throw domain_error("sample count must be positive");
  std::vector<double> violation(samples, 0.0);
  std::vector<std::string> what(samples);
  parallel_for(samples, [&](int i) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    try {
      violation[i] = body(seed, what[i]);
    } catch (const std::exception& error) {
      violation[i] = kInf;
      what[i] = error.what();
    }
  });
  SweepReport report;
  report.suite = std::move(suite);
  report.samples = samples;
  report.worst = -kInf;
  for (int i = 0; i < samples; ++i) {
    report.worst = std::max(report.worst, violation[i]);
    if (violation[i] > tol::sweep) {
      ++report.failures;
      if (report.failing.size() < 16) {
        report.failing.push_back({seed0 + static_cast<std::uint64_t>(i),
                                  what[i].empty() ? "tolerance exceeded" : what[i],
                                  violation[i]});
      }
    }
  }
  report.pass = report.failures == 0;
  return report;
}

HamiltonianSpec equidistant_ladder(int dim, double gap) {
  std::vector<double> energies(dim);
  for (int n = 0; n < dim; ++n) energies[n] = n * gap;
  return HamiltonianSpec(energies);
}

// Shared random-input recipe for the thermal-channel sweeps.
struct ThermalSample {
  HamiltonianSpec h;
  InverseTemperature beta;
  KrausChannel channel;
  qstate::DensityMatrix rho;
};

ThermalSample draw_thermal_sample(std::uint64_t seed, std::uint64_t channel_salt) {
  std::mt19937_64 gen(seed);
  const int d = 2 + (uniform01(gen) < 0.5 ? 0 : 1);
  HamiltonianSpec h = (seed % 2 == 0) ? equidistant_ladder(d, 0.4 + 1.2 * uniform01(gen))
                                      : random_hamiltonian(d, gen);
  const InverseTemperature beta(0.25 + 1.75 * uniform01(gen));
  KrausChannel channel = random_thermal_channel(h, beta, 5, seed ^ channel_salt);
  qstate::DensityMatrix rho = random_state(d, gen);
  return ThermalSample{std::move(h), beta, std::move(channel), std::move(rho)};
}

}  // namespace

// ------------------------- raw random draws -------------------------

HamiltonianSpec random_hamiltonian(int dim, std::mt19937_64& gen) {
  if (dim < 2) throw domain_error("ladder dimension must be at least 2");
  std::vector<double> energies(dim, 0.0);
  for (int n = 1; n < dim; ++n) energies[n] = energies[n - 1] + 0.3 + 1.4 * uniform01(gen);
  return HamiltonianSpec(std::move(energies));
}

qstate::DensityMatrix random_state(int dim, std::mt19937_64& gen) {
  if (dim < 1) throw domain_error("state dimension must be positive");
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = complex_gaussian(gen);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  const Matrix hermitized = 0.5 * (rho + Matrix(rho.adjoint()));
  return qstate::DensityMatrix(hermitized);
}

// ------------------------- random channels -------------------------

KrausChannel random_symmetric_channel(const HamiltonianSpec& h, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const int d = h.dim();
  const std::vector<double> env = mirrored_spectrum(h);
  std::vector<double> weights(d);
  double sum = 0.0;
  for (int b = 0; b < d; ++b) {
    weights[b] = 0.05 + 0.95 * uniform01(gen);
    sum += weights[b];
  }
  for (double& w : weights) w /= sum;
  const Matrix u = block_random_unitary(joint_totals(h, env), gen);
  return KrausChannel(dilation_kraus(u, d, d, weights), h, h);
}

KrausChannel random_thermal_channel(const HamiltonianSpec& h,
                                    const InverseTemperature& beta, int bath_levels,
                                    std::uint64_t seed) {
  if (bath_levels < 2) throw domain_error("bath needs at least 2 levels");
  std::mt19937_64 gen(seed);
  const int d = h.dim();
  const std::vector<double> mirror = mirrored_spectrum(h);
  const double span = h.energy(d - 1) - h.energy(0);
  std::vector<double> ladder = mirror;
  for (int k = 1; static_cast<int>(ladder.size()) < bath_levels; ++k) {
    for (double base : mirror) {
      const double level = base + k * span;
      const bool known = std::any_of(ladder.begin(), ladder.end(), [&](double v) {
        return std::abs(v - level) <= tol::frequency;
      });
      if (!known) ladder.push_back(level);
    }
  }
  std::sort(ladder.begin(), ladder.end());
  ladder.resize(bath_levels);

  std::vector<double> weights(bath_levels, 0.0);
  if (beta.is_infinite()) {
    weights[0] = 1.0;
  } else {
    double sum = 0.0;
    for (int b = 0; b < bath_levels; ++b) {
      weights[b] = std::exp(-beta.value() * (ladder[b] - ladder[0]));
      sum += weights[b];
    }
    for (double& w : weights) w /= sum;
  }
  const Matrix u = block_random_unitary(joint_totals(h, ladder), gen);
  return KrausChannel(dilation_kraus(u, d, bath_levels, weights), h, h);
}

// ------------------------- saturation -------------------------

double max_coherence_fixed_stochastic(double stay_ground, double stay_excited,
                                      double tolerance) {
  require_probability(stay_ground, "stay_ground");
  require_probability(stay_excited, "stay_excited");
  if (!(tolerance > 0.0)) throw domain_error("tolerance must be positive");
  const auto feasible = [&](double t) {
    return min_eigenvalue(covariant_qubit_choi(stay_ground, stay_excited, t)) >= -1e-13;
  };
  double lo = 0.0;
  double hi = 1.0;
  if (feasible(hi)) return hi;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<Matrix> covariant_qubit_kraus(double stay_ground, double stay_excited,
                                          double multiplier) {
  require_probability(stay_ground, "stay_ground");
  require_probability(stay_excited, "stay_excited");
  const Matrix choi = covariant_qubit_choi(stay_ground, stay_excited, multiplier);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(choi);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw domain_error("multiplier is not completely positive for these populations");
  std::vector<Matrix> ops;
  for (int k = 0; k < 4; ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda <= 1e-14) continue;
    Matrix w(2, 2);
    for (int out = 0; out < 2; ++out)
      for (int in = 0; in < 2; ++in)
        w(out, in) = std::sqrt(lambda) * solver.eigenvectors()(out * 2 + in, k);
    ops.push_back(std::move(w));
  }
  return ops;
}

SaturationReport verify_saturation(const std::string& bound_id,
                                   std::map<std::string, double> params,
                                   double tolerance) {
  if (!(tolerance > 0.0)) throw domain_error("tolerance must be positive");
  SaturationReport report;
  report.bound_id = bound_id;

  const auto take = [&](std::map<std::string, double> defaults) {
    for (const auto& [key, value] : params) {
      (void)value;
      if (defaults.find(key) == defaults.end())
        throw domain_error("unknown parameter '" + key + "' for " + bound_id);
    }
    for (auto& [key, value] : defaults) {
      const auto it = params.find(key);
      if (it != params.end()) value = it->second;
    }
    report.params = defaults;
    return defaults;
  };

  bool extra_ok = true;
  if (bound_id == "shift_down" || bound_id == "shift_up") {
    auto ps = take({{"beta", 0.5}, {"gap", 1.0}, {"bath_levels", 30.0}, {"coherence", 0.25}});
    const InverseTemperature beta(ps.at("beta"));
    const double gap = ps.at("gap");
    const double c = ps.at("coherence");
    const int levels = static_cast<int>(std::llround(ps.at("bath_levels")));
    const bool down = bound_id == "shift_down";
    const HamiltonianSpec h({0.0, gap, 2.0 * gap});
    Matrix rho = Matrix::Identity(3, 3) / 3.0;
    const int src_row = down ? 2 : 1;
    rho(src_row, src_row - 1) = c;
    rho(src_row - 1, src_row) = c;
    const qstate::DensityMatrix in(rho);
    const KrausChannel ch = channels::shift_channel(
        down ? ShiftDirection::down : ShiftDirection::up, beta, gap, levels);
    const qstate::DensityMatrix out = channels::apply(ch, in);
    const int target_row = down ? 1 : 2;
    report.achieved = std::abs(out.entry(target_row, target_row - 1));
    const bounds::BoundQuery query{
        in, h, std::nullopt, beta, target_row, target_row - 1};
    report.bound = bounds::thermal_bound(query);
  } else if (bound_id == "merge_symmetric") {
    auto ps = take({{"a", 0.15}, {"b", 0.2}, {"gap", 1.0}});
    const double a = ps.at("a");
    const double b = ps.at("b");
    const double total = std::hypot(a, b);
    if (!(total > 0.0)) throw domain_error("coherences must not both vanish");
    Matrix rho = Matrix::Identity(3, 3) / 3.0;
    rho(1, 0) = a;
    rho(0, 1) = a;
    rho(2, 1) = b;
    rho(1, 2) = b;
    const qstate::DensityMatrix in(rho);
    const KrausChannel ch = channels::merge_channel(b / total, ps.at("gap"));
    const qstate::DensityMatrix out = channels::apply(ch, in);
    report.achieved = std::abs(out.entry(1, 0));
    report.bound = bounds::merge_bound_symmetric(a, b);
  } else if (bound_id == "qubit_symmetric") {
    auto ps = take({{"p", 0.5}, {"q", 0.75}, {"coherence", 0.4}});
    const double p = ps.at("p");
    const double q = ps.at("q");
    const double c = ps.at("coherence");
    Matrix rho(2, 2);
    rho << p, c, c, 1.0 - p;
    const qstate::DensityMatrix in(rho);
    const KrausChannel ch = channels::qubit_extremal_symmetric_channel(p, q);
    const qstate::DensityMatrix out = channels::apply(ch, in);
    report.achieved = std::abs(out.entry(0, 1));
    report.bound = bounds::qubit_symmetric_bound(p, q, c);
    extra_ok = std::abs(out.entry(0, 0).real() - q) <= 1e-9;
  } else if (bound_id == "qubit_thermal") {
    auto ps = take({{"p", 0.5}, {"q", 0.6}, {"r", 2.0 / 3.0}, {"coherence", 0.4}});
    const double p = ps.at("p");
    const double q = ps.at("q");
    const double r = ps.at("r");
    const double c = ps.at("coherence");
    const channels::StochasticMatrix lambda = bounds::qubit_fixed_stochastic(p, q, r);
    const double multiplier =
        max_coherence_fixed_stochastic(lambda.prob(0, 0), lambda.prob(1, 1));
    const KrausChannel ch(covariant_qubit_kraus(lambda.prob(0, 0), lambda.prob(1, 1),
                                                multiplier),
                          HamiltonianSpec({0.0, 1.0}), HamiltonianSpec({0.0, 1.0}));
    Matrix rho(2, 2);
    rho << p, c, c, 1.0 - p;
    const qstate::DensityMatrix in(rho);
    const qstate::DensityMatrix out = channels::apply(ch, in);
    report.achieved = std::abs(out.entry(0, 1));
    report.bound = bounds::qubit_thermal_bound(p, q, r, c);
    extra_ok = std::abs(out.entry(0, 0).real() - q) <= 1e-9;
  } else {
    throw domain_error("unknown bound id '" + bound_id +
                       "' (known: shift_down, shift_up, merge_symmetric, "
                       "qubit_symmetric, qubit_thermal)");
  }

  report.ratio = report.bound > 0.0
                     ? report.achieved / report.bound
                     : (report.achieved == 0.0 ? 1.0 : kInf);
  report.pass = extra_ok && report.achieved <= report.bound + 1e-9 &&
                report.ratio >= 1.0 - tolerance;
  return report;
}

std::vector<SaturationReport> saturation_suite() {
  return {
      verify_saturation("shift_down", {}, 1e-6),
      verify_saturation("shift_up", {}, 1e-6),
      verify_saturation("merge_symmetric", {}, 1e-9),
      verify_saturation("qubit_symmetric", {}, 1e-9),
      verify_saturation("qubit_thermal", {}, 1e-7),
  };
}

std::vector<ConvergencePoint> bath_convergence_study(ShiftDirection direction,
                                                     const InverseTemperature& beta,
                                                     double gap,
                                                     const std::vector<int>& bath_levels) {
  if (bath_levels.empty()) throw domain_error("bath size list must not be empty");
  const double coherence = 0.25;
  const bool down = direction == ShiftDirection::down;
  const double limit =
      down ? 1.0 : (beta.is_infinite() ? 0.0 : std::exp(-beta.value() * gap));
  std::vector<ConvergencePoint> points;
  points.reserve(bath_levels.size());
  for (int levels : bath_levels) {
    const KrausChannel ch = channels::shift_channel(direction, beta, gap, levels);
    Matrix rho = Matrix::Identity(3, 3) / 3.0;
    const int src_row = down ? 2 : 1;
    rho(src_row, src_row - 1) = coherence;
    rho(src_row - 1, src_row) = coherence;
    const qstate::DensityMatrix out = channels::apply(ch, qstate::DensityMatrix(rho));
    const int target_row = down ? 1 : 2;
    const double achieved = std::abs(out.entry(target_row, target_row - 1)) / coherence;
    points.push_back({levels, achieved, std::abs(achieved - limit)});
  }
  return points;
}

// ------------------------- reproducible sweeps -------------------------

SweepReport monotone_sweep(int samples, std::uint64_t seed0) {
  return run_sweep("monotone", samples, seed0, [](std::uint64_t seed, std::string& what) {
    std::mt19937_64 gen(seed);
    int dim = 2 + static_cast<int>(uniform01(gen) * 3.0);
    dim = std::min(dim, 4);
    const HamiltonianSpec h = random_hamiltonian(dim, gen);
    const qstate::DensityMatrix rho = random_state(dim, gen);
    const KrausChannel ch = random_symmetric_channel(h, seed ^ 0x517cc1b727220a95ULL);
    const qstate::DensityMatrix out = channels::apply(ch, rho);
    const qstate::ModeDecomposition before = qstate::mode_decompose(rho, h);
    const qstate::ModeDecomposition after = qstate::mode_decompose(out, h);
    std::vector<double> freqs = before.frequencies();
    for (double f : after.frequencies()) {
      const bool known = std::any_of(freqs.begin(), freqs.end(), [&](double g) {
        return std::abs(f - g) <= tol::frequency;
      });
      if (!known) freqs.push_back(f);
    }
    double worst = -kInf;
    double worst_freq = 0.0;
    for (double f : freqs) {
      const double growth = after.l1(f) - before.l1(f);
      if (growth > worst) {
        worst = growth;
        worst_freq = f;
      }
    }
    if (worst > tol::sweep)
      what = "mode " + fmt(worst_freq) + " magnitude grew by " + fmt(worst);
    return worst;
  });
}

SweepReport dominance_sweep(int samples, std::uint64_t seed0) {
  return run_sweep("dominance", samples, seed0, [](std::uint64_t seed, std::string& what) {
    const ThermalSample sample = draw_thermal_sample(seed, 0xd1342543de82ef95ULL);
    const qstate::DensityMatrix out = channels::apply(sample.channel, sample.rho);
    const channels::StochasticMatrix lambda = channels::induced_stochastic(sample.channel);
    const int d = sample.h.dim();
    double worst = -kInf;
    std::string worst_entry;
    for (int n = 0; n < d; ++n) {
      for (int m = 0; m < d; ++m) {
        if (n == m) continue;
        const double actual = std::abs(out.entry(n, m));
        const bounds::BoundQuery query{sample.rho, sample.h, lambda, sample.beta, n, m};
        const double slack =
            std::max({actual - bounds::thermal_bound(query),
                      actual - bounds::symmetric_bound(query),
                      actual - bounds::cptp_bound(query)});
        if (slack > worst) {
          worst = slack;
          worst_entry = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
      }
    }
    if (worst > tol::sweep)
      what = "output entry " + worst_entry + " exceeds a bound by " + fmt(worst);
    return worst;
  });
}

SweepReport transition_sweep(int samples, std::uint64_t seed0) {
  return run_sweep("transition", samples, seed0, [](std::uint64_t seed, std::string& what) {
    const ThermalSample sample = draw_thermal_sample(seed, 0x94d049bb133111ebULL);
    const channels::StochasticMatrix lambda = channels::induced_stochastic(sample.channel);
    const int d = sample.h.dim();
    double worst = -kInf;
    std::string worst_entry;
    for (int from = 0; from < d; ++from) {
      for (int to = 0; to < d; ++to) {
        const double cap = thermo::transition_bound(sample.h, sample.beta, from, to);
        const double excess = lambda.prob(to, from) - cap;
        if (excess > worst) {
          worst = excess;
          worst_entry = std::to_string(from) + " -> " + std::to_string(to);
        }
      }
    }
    if (worst > tol::sweep)
      what = "transition " + worst_entry + " exceeds its cap by " + fmt(worst);
    return worst;
  });
}

SweepReport qubit_equivalence_sweep(int p_grid, int q_grid,
                                    const std::vector<double>& thermal_weights) {
  if (p_grid < 1 || q_grid < 1) throw domain_error("population grids must be positive");
  if (thermal_weights.empty()) throw domain_error("thermal weight list must not be empty");
  for (double r : thermal_weights) {
    if (!(r >= 0.5) || !(r < 1.0))
      throw domain_error("thermal ground weight must lie in [0.5, 1)");
  }
  const HamiltonianSpec h({0.0, 1.0});
  SweepReport report;
  report.suite = "qubit-equivalence";
  report.samples = p_grid * q_grid * static_cast<int>(thermal_weights.size());
  report.worst = 0.0;
  std::uint64_t index = 0;
  for (double r : thermal_weights) {
    const InverseTemperature beta(std::log(r / (1.0 - r)));
    for (int i = 0; i < p_grid; ++i) {
      const double p = static_cast<double>(i + 1) / (p_grid + 1);
      const thermo::EnergyDistribution from({p, 1.0 - p}, h);
      const double edge = thermo::extremal_incoherent(p, r);
      const double lo = std::min(p, edge) - tol::lorenz;
      const double hi = std::max(p, edge) + tol::lorenz;
      for (int j = 0; j < q_grid; ++j, ++index) {
        const double q = static_cast<double>(j + 1) / (q_grid + 1);
        const thermo::EnergyDistribution to({q, 1.0 - q}, h);
        const bool curve = thermo::thermomajorizes(from, to, beta);
        const bool window = q >= lo && q <= hi;
        if (curve != window) {
          ++report.failures;
          report.worst = 1.0;
          if (report.failing.size() < 16) {
            report.failing.push_back(
                {index,
                 "p=" + fmt(p) + " q=" + fmt(q) + " r=" + fmt(r) + " curve says " +
                     (curve ? "reachable" : "unreachable") + ", window says " +
                     (window ? "reachable" : "unreachable"),
                 1.0});
          }
        }
      }
    }
  }
  report.pass = report.failures == 0;
  return report;
}

int thread_budget() {
  const char* env = std::getenv("MODEFLOW_THREADS");
  long value = 0;
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0)
      throw domain_error("MODEFLOW_THREADS must be a non-negative integer");
  }
  if (value == 0) value = static_cast<long>(std::thread::hardware_concurrency());
  if (value <= 0) value = 1;
  return static_cast<int>(std::min(value, 256L));
}

}  // namespace modeflow::oracle
