// Acceptance gate: one line per criterion, [PASS]/[FAIL], keeps going after
// failures, exit 1 when anything failed.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modeflow/bounds.hpp"
#include "modeflow/channels.hpp"
#include "modeflow/io.hpp"
#include "modeflow/oracle.hpp"
#include "modeflow/qstate.hpp"
#include "modeflow/regions.hpp"
#include "modeflow/thermo.hpp"

using namespace modeflow;

namespace {

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ------------------------- criterion 1 -------------------------

std::string mode_algebra() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20240817);
  double worst_recon = 0.0;
  double worst_phase = 0.0;
  for (int k = 0; k < 1000; ++k) {
    int dim = 2 + static_cast<int>(uniform01(gen) * 5.0);
    if (dim > 6) dim = 6;
    const qstate::HamiltonianSpec h = oracle::random_hamiltonian(dim, gen);
    const qstate::DensityMatrix rho = oracle::random_state(dim, gen);
    const qstate::ModeDecomposition modes = qstate::mode_decompose(rho, h);
    worst_recon = std::max(
        worst_recon,
        (modes.reconstruct() - rho.matrix()).cwiseAbs().maxCoeff());

    const double t = 5.0 * uniform01(gen);
    const qstate::DensityMatrix moved = qstate::time_translate(rho, h, t);
    const qstate::ModeDecomposition moved_modes = qstate::mode_decompose(moved, h);
    for (const qstate::ModeComponent& mode : modes.components()) {
      const Complex phase = std::exp(Complex(0.0, -mode.frequency * t));
      const Matrix expected = phase * mode.component;
      const Matrix actual = moved_modes.component_or_zero(mode.frequency);
      worst_phase = std::max(worst_phase, (actual - expected).cwiseAbs().maxCoeff());
    }
  }
  const double elapsed = seconds_since(start);
  if (worst_recon > 1e-14) {
    throw std::runtime_error("reconstruction residual " + fmt(worst_recon) +
                             " exceeds 1e-14");
  }
  if (worst_phase > 1e-12) {
    throw std::runtime_error("phase-covariance residual " + fmt(worst_phase) +
                             " exceeds 1e-12");
  }
  if (elapsed >= 5.0) {
    throw std::runtime_error("took " + fmt(elapsed) + " s (budget 5 s)");
  }
  return "1000 states, max reconstruction " + fmt(worst_recon) + ", max phase drift " +
         fmt(worst_phase) + ", " + fmt(elapsed) + " s";
}

// ------------------------- criteria 2-4: sweeps -------------------------

std::string sweep_criterion(const oracle::SweepReport& report, double budget_s,
                            double elapsed) {
  if (!report.pass) {
    std::string detail = report.suite + ": " + std::to_string(report.failures) +
                         " violations, worst " + fmt(report.worst);
    if (!report.failing.empty()) {
      detail += " (first seed " + std::to_string(report.failing.front().seed) + ": " +
                report.failing.front().what + ")";
    }
    throw std::runtime_error(detail);
  }
  if (budget_s > 0.0 && elapsed >= budget_s) {
    throw std::runtime_error("took " + fmt(elapsed) + " s (budget " + fmt(budget_s) +
                             " s)");
  }
  std::string detail = std::to_string(report.samples) + " samples, worst margin " +
                       fmt(report.worst);
  if (elapsed > 0.0) detail += ", " + fmt(elapsed) + " s";
  return detail;
}

std::string monotone_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const oracle::SweepReport report = oracle::monotone_sweep(10000, 424242);
  return sweep_criterion(report, 60.0, seconds_since(start));
}

std::string dominance_criterion() {
  const oracle::SweepReport report = oracle::dominance_sweep(10000, 434343);
  return sweep_criterion(report, 0.0, 0.0);
}

std::string transition_criterion() {
  const oracle::SweepReport report = oracle::transition_sweep(10000, 444444);
  return sweep_criterion(report, 0.0, 0.0);
}

// ------------------------- criterion 5 -------------------------

std::string saturation_criterion() {
  std::ostringstream detail;

  const oracle::SaturationReport down = oracle::verify_saturation("shift_down", {}, 1e-6);
  if (!down.pass) {
    throw std::runtime_error("shift_down ratio " + fmt(down.ratio) + " below 1 - 1e-6");
  }
  const oracle::SaturationReport up = oracle::verify_saturation("shift_up", {}, 1e-6);
  if (!up.pass) {
    throw std::runtime_error("shift_up ratio " + fmt(up.ratio) + " below 1 - 1e-6");
  }
  detail << "shift ratios " << fmt(down.ratio) << "/" << fmt(up.ratio);

  double worst_merge = 0.0;
  for (double a : {0.05, 0.10, 0.15, 0.20}) {
    for (double b : {0.05, 0.10, 0.15, 0.20}) {
      const oracle::SaturationReport merge =
          oracle::verify_saturation("merge_symmetric", {{"a", a}, {"b", b}}, 1e-9);
      const double miss = std::abs(merge.achieved - merge.bound);
      worst_merge = std::max(worst_merge, miss);
      if (!merge.pass || miss > 1e-12) {
        throw std::runtime_error("merge at a=" + fmt(a) + " b=" + fmt(b) + " misses by " +
                                 fmt(miss));
      }
    }
  }
  detail << ", merge worst miss " << fmt(worst_merge);

  double worst_qubit = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double p = (i + 0.5) / 20.0;
      const double q = (j + 0.5) / 20.0;
      const double c = 0.9 * std::sqrt(p * (1.0 - p));
      const oracle::SaturationReport report = oracle::verify_saturation(
          "qubit_symmetric", {{"p", p}, {"q", q}, {"coherence", c}}, 1e-9);
      const double miss = std::abs(report.achieved - report.bound);
      worst_qubit = std::max(worst_qubit, miss);
      if (!report.pass || miss > 1e-12) {
        throw std::runtime_error("qubit channel at p=" + fmt(p) + " q=" + fmt(q) +
                                 " misses by " + fmt(miss));
      }
    }
  }
  detail << ", qubit grid worst miss " << fmt(worst_qubit);
  return detail.str();
}

// ------------------------- criterion 6 -------------------------

std::string equivalence_criterion() {
  const oracle::SweepReport report =
      oracle::qubit_equivalence_sweep(50, 50, {0.55, 0.6, 2.0 / 3.0, 0.75, 0.9});
  if (report.failures != 0 || !report.pass) {
    throw std::runtime_error(std::to_string(report.failures) +
                             " disagreements between curve order and window form");
  }
  return std::to_string(report.samples) + " grid points x 5 temperatures, 0 disagreements";
}

// ------------------------- criterion 7 -------------------------

struct InitialState {
  std::string name;
  double p;
  double c;
};

const io::RegionRow* row_at(const std::vector<io::RegionRow>& rows, double q) {
  for (const io::RegionRow& row : rows) {
    if (std::abs(row.q - q) < 1e-9) return &row;
  }
  return nullptr;
}

std::string region_criterion() {
  const double r = 2.0 / 3.0;
  const std::vector<InitialState> states{{"balanced", 0.5, 0.45}, {"tilted", 0.7, 0.2}};
  const std::filesystem::path out_dir = "acceptance_out";
  std::filesystem::create_directories(out_dir);
  std::ostringstream detail;

  for (const InitialState& state : states) {
    const regions::RegionBoundary sym = regions::symmetric_region(state.p, state.c);
    const regions::RegionBoundary thermal =
        regions::thermal_region(state.p, state.c, r);
    const regions::RegionBoundary guaranteed =
        regions::guaranteed_region(state.p, state.c, r);

    // persist and read back, so the checked data is what the CSVs hold
    std::map<std::string, std::vector<io::RegionRow>> rows;
    rows["symmetric"] = io::region_rows(sym);
    rows["thermal"] = io::region_rows(thermal);
    rows["guaranteed"] = io::region_rows(guaranteed);
    rows["triangle"] = io::region_rows(
        regions::triangle_region(state.p, state.c, r), state.p, state.c, r);
    for (auto& [kind, kind_rows] : rows) {
      const std::string path = (out_dir / (state.name + "_" + kind + ".csv")).string();
      io::write_region_csv(path, kind_rows);
      kind_rows = io::read_region_csv(path);
    }

    const auto& sym_rows = rows["symmetric"];
    const auto& thermal_rows = rows["thermal"];
    const auto& guaranteed_rows = rows["guaranteed"];
    if (thermal_rows.size() != guaranteed_rows.size()) {
      throw std::runtime_error(state.name +
                               ": thermal and guaranteed windows disagree");
    }
    for (std::size_t i = 0; i < thermal_rows.size(); ++i) {
      if (std::abs(thermal_rows[i].q - guaranteed_rows[i].q) > 1e-12) {
        throw std::runtime_error(state.name + ": window grids differ at index " +
                                 std::to_string(i));
      }
      if (guaranteed_rows[i].d > thermal_rows[i].d + 1e-12) {
        throw std::runtime_error(state.name + ": guaranteed exceeds thermal at q = " +
                                 fmt(thermal_rows[i].q));
      }
      const io::RegionRow* sym_row = row_at(sym_rows, thermal_rows[i].q);
      if (sym_row == nullptr) {
        throw std::runtime_error(state.name + ": symmetric grid misses q = " +
                                 fmt(thermal_rows[i].q));
      }
      if (thermal_rows[i].d > sym_row->d + 1e-12) {
        throw std::runtime_error(state.name + ": thermal exceeds symmetric at q = " +
                                 fmt(thermal_rows[i].q));
      }
    }

    // near zero temperature the thermal cap rejoins the symmetric cap above p
    const regions::RegionBoundary cold =
        regions::thermal_region(state.p, state.c, 0.99);
    double worst_gap = 0.0;
    for (const regions::RegionSample& sample : cold.samples) {
      if (sample.q <= state.p + 1e-9) continue;
      const double gap =
          bounds::qubit_symmetric_bound(state.p, sample.q, state.c) - sample.coherence;
      worst_gap = std::max(worst_gap, gap);
    }
    if (worst_gap >= 0.02) {
      throw std::runtime_error(state.name + ": cold-limit gap " + fmt(worst_gap) +
                               " not below 0.02");
    }
    detail << state.name << " nested (" << thermal_rows.size()
           << " window points), cold gap " << fmt(worst_gap) << "; ";
  }

  // temperature monotonicity at fixed targets, over the feasible part of the
  // reference temperature set {0.55, 2/3, 0.8, 0.95}
  const std::vector<double> temps{0.55, 2.0 / 3.0, 0.8, 0.95};
  const auto feasible_caps = [&](double p, double q, double c) {
    std::vector<std::pair<double, double>> caps;
    for (double rr : temps) {
      try {
        caps.emplace_back(rr, bounds::qubit_thermal_bound(p, q, rr, c));
      } catch (const domain_error&) {
        // q not reachable from p at this temperature
      }
    }
    return caps;
  };

  const auto cooling = feasible_caps(0.7, 0.75, 0.2);  // toward the ground state
  if (cooling.size() < 2) throw std::runtime_error("cooling target barely feasible");
  for (std::size_t i = 0; i + 1 < cooling.size(); ++i) {
    if (cooling[i + 1].second <= cooling[i].second) {
      throw std::runtime_error("cooling cap not increasing with the ground weight");
    }
  }
  const auto heating = feasible_caps(0.7, 0.66, 0.2);  // away from the ground state
  if (heating.size() < 2) throw std::runtime_error("heating target barely feasible");
  for (std::size_t i = 0; i + 1 < heating.size(); ++i) {
    if (heating[i + 1].second >= heating[i].second) {
      throw std::runtime_error("heating cap not decreasing with the ground weight");
    }
  }
  detail << "cooling cap " << fmt(cooling.front().second) << " -> "
         << fmt(cooling.back().second) << " rising, heating cap "
         << fmt(heating.front().second) << " -> " << fmt(heating.back().second)
         << " falling";
  return detail.str();
}

// ------------------------- criterion 8 -------------------------

std::string gap_criterion() {
  const double p = 0.5, q = 0.6, r = 2.0 / 3.0, c = 1.0;
  const double cap = bounds::qubit_thermal_bound(p, q, r, c);
  const double promised = thermo::guaranteed_fraction(p, q, r) * c;
  const double gap = cap - promised;
  if (gap <= 0.05) {
    throw std::runtime_error("gap " + fmt(gap) + " not above 0.05");
  }
  return "achievable cap " + fmt(cap) + " vs guaranteed " + fmt(promised) + ", gap " +
         fmt(gap);
}

// ------------------------- criterion 9 -------------------------

std::string cycle_criterion() {
  const qstate::InverseTemperature beta(0.5);
  const channels::KrausChannel down =
      channels::shift_channel(channels::ShiftDirection::down, beta, 1.0, 40);
  const channels::KrausChannel up =
      channels::shift_channel(channels::ShiftDirection::up, beta, 1.0, 40);
  const channels::KrausChannel cycle = channels::compose(up, down);

  Matrix rho = Matrix::Identity(3, 3) / 3.0;
  rho(2, 1) = 0.25;
  rho(1, 2) = 0.25;
  const qstate::DensityMatrix out =
      channels::apply(cycle, qstate::DensityMatrix(rho));
  const double net = std::abs(out.entry(2, 1)) / 0.25;
  const double target = std::exp(-0.5);
  const double miss = std::abs(net - target);
  if (miss > 1e-4) {
    throw std::runtime_error("round-trip multiplier " + fmt(net) + " misses " +
                             fmt(target) + " by " + fmt(miss));
  }
  return "round-trip multiplier " + fmt(net) + " vs e^{-beta gap} " + fmt(target) +
         ", miss " + fmt(miss);
}

// ------------------------- driver -------------------------

struct Criterion {
  int number;
  const char* title;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "mode split reconstructs and commutes with free evolution", mode_algebra},
      {2, "mode magnitudes never grow under covariant channels", monotone_criterion},
      {3, "thermal-channel outputs respect all three bounds", dominance_criterion},
      {4, "induced transitions respect the detailed-balance cap", transition_criterion},
      {5, "explicit channels saturate their bounds", saturation_criterion},
      {6, "curve order matches the qubit window form", equivalence_criterion},
      {7, "region boundaries nest, converge when cold, move monotonically",
       region_criterion},
      {8, "an achievable cap strictly above the guaranteed share", gap_criterion},
      {9, "down-then-up shift cycle pays the thermal factor once", cycle_criterion},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string verdict = "[PASS]";
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& error) {
      verdict = "[FAIL]";
      detail = error.what();
      ++failures;
    }
    std::printf("%s criterion %d: %s - %s\n", verdict.c_str(), criterion.number,
                criterion.title, detail.c_str());
    std::fflush(stdout);
  }
  if (failures != 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
