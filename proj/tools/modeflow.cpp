// Command-line front-end: state/channel inspection, bound evaluation,
// reachability checks, region export, and the verification suites.
// Exit codes: 0 success, 1 domain violation, 2 I/O or parse failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modeflow/bounds.hpp"
#include "modeflow/channels.hpp"
#include "modeflow/io.hpp"
#include "modeflow/oracle.hpp"
#include "modeflow/qstate.hpp"
#include "modeflow/regions.hpp"
#include "modeflow/thermo.hpp"

namespace {

using json = nlohmann::json;
using modeflow::Complex;
using modeflow::Matrix;
using modeflow::domain_error;
using modeflow::parse_error;
namespace bounds = modeflow::bounds;
namespace channels = modeflow::channels;
namespace io = modeflow::io;
namespace oracle = modeflow::oracle;
namespace qstate = modeflow::qstate;
namespace regions = modeflow::regions;
namespace thermo = modeflow::thermo;

int g_status = 0;  // set by verify when a suite fails

// Human-readable tables use 6 significant digits; io::format_number (17) is
// for machine-readable output.
std::string hfmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string field;
  while (std::getline(stream, field, ',')) {
    if (field.empty()) throw parse_error("empty entry in list '" + text + "'");
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size())
      throw parse_error("bad number '" + field + "' in list");
    values.push_back(value);
  }
  if (values.empty()) throw parse_error("empty list");
  return values;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream stream(text);
  std::string field;
  while (std::getline(stream, field, ',')) {
    if (!field.empty()) names.push_back(field);
  }
  if (names.empty()) throw parse_error("empty list");
  return names;
}

// --beta takes the inverse temperature directly; --r gives the thermal ground
// weight of a two-level ladder instead.
qstate::InverseTemperature resolve_beta(const std::optional<double>& beta,
                                        const std::optional<double>& r,
                                        const qstate::HamiltonianSpec& h) {
  if (beta.has_value()) return qstate::InverseTemperature(*beta);
  if (!r.has_value()) throw domain_error("give --beta or --r");
  if (h.dim() != 2) throw domain_error("--r requires a two-level ladder; give --beta");
  return regions::beta_from_ground_population(*r, h.frequency(1, 0));
}

json matrix_json(const Matrix& m, bool imaginary) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    std::string line = " ";
    for (int c = 0; c < m.cols(); ++c) {
      line += " " + hfmt(m(r, c).real());
      if (std::abs(m(r, c).imag()) > 0.0) line += hfmt(m(r, c).imag()) + "i";
    }
    std::cout << line << "\n";
  }
}

// ------------------------- decompose -------------------------

struct DecomposeOpts {
  std::string state_path;
  bool as_json = false;
};

void run_decompose(const DecomposeOpts& opts) {
  const io::StateFile sf = io::read_state(opts.state_path);
  const qstate::ModeDecomposition modes = qstate::mode_decompose(sf.rho, sf.hamiltonian);
  if (opts.as_json) {
    json out;
    out["modes"] = json::array();
    for (const qstate::ModeComponent& mode : modes.components()) {
      json entries = json::array();
      for (int r = 0; r < mode.component.rows(); ++r) {
        for (int c = 0; c < mode.component.cols(); ++c) {
          const Complex v = mode.component(r, c);
          if (std::abs(v) <= 1e-15) continue;
          entries.push_back({{"row", r}, {"col", c}, {"re", v.real()}, {"im", v.imag()}});
        }
      }
      out["modes"].push_back({{"frequency", mode.frequency},
                              {"l1", modes.l1(mode.frequency)},
                              {"entries", std::move(entries)}});
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "frequency      l1             entries\n";
  for (const qstate::ModeComponent& mode : modes.components()) {
    std::string entries;
    for (int r = 0; r < mode.component.rows(); ++r) {
      for (int c = 0; c < mode.component.cols(); ++c) {
        const Complex v = mode.component(r, c);
        if (std::abs(v) <= 1e-15) continue;
        if (!entries.empty()) entries += "  ";
        entries += "(" + std::to_string(r) + "," + std::to_string(c) + ")=" +
                   hfmt(v.real());
        if (std::abs(v.imag()) > 0.0) entries += (v.imag() > 0 ? "+" : "") +
                                                 hfmt(v.imag()) + "i";
      }
    }
    char line[64];
    std::snprintf(line, sizeof(line), "%-14s %-14s ", hfmt(mode.frequency).c_str(),
                  hfmt(modes.l1(mode.frequency)).c_str());
    std::cout << line << entries << "\n";
  }
}

// ------------------------- check-channel -------------------------

struct CheckOpts {
  std::string channel_path;
  std::vector<double> betas;
  std::optional<double> r;
  bool as_json = false;
};

void run_check(const CheckOpts& opts) {
  const io::RawChannelFile raw = io::read_channel_raw(opts.channel_path);
  std::vector<qstate::InverseTemperature> betas;
  for (double b : opts.betas) betas.push_back(qstate::InverseTemperature(b));
  if (opts.r.has_value())
    betas.push_back(resolve_beta(std::nullopt, opts.r, raw.input));
  const channels::ChannelClassReport report =
      channels::classify(raw.operators, raw.input, raw.output, betas);
  if (opts.as_json) {
    json out;
    out["trace_preserving"] = report.trace_preserving;
    out["completeness_violation"] = report.completeness_violation;
    out["symmetric"] = report.symmetry.symmetric;
    out["symmetry_violation"] = report.symmetry.violation;
    out["gibbs"] = json::array();
    for (const auto& [beta, check] : report.gibbs) {
      out["gibbs"].push_back({{"beta", beta},
                              {"preserving", check.preserving},
                              {"violation", check.violation}});
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "trace preserving: " << (report.trace_preserving ? "yes" : "no")
            << " (violation " << hfmt(report.completeness_violation) << ")\n";
  std::cout << "covariant: " << (report.symmetry.symmetric ? "yes" : "no")
            << " (violation " << hfmt(report.symmetry.violation) << ")\n";
  for (const auto& [beta, check] : report.gibbs) {
    std::cout << "gibbs preserving at beta " << hfmt(beta) << ": "
              << (check.preserving ? "yes" : "no") << " (violation "
              << hfmt(check.violation) << ")\n";
  }
}

// ------------------------- bound -------------------------

struct BoundOpts {
  std::string which;
  std::string state_path;
  std::string channel_path;
  int row = 0;
  int col = 0;
  std::optional<double> beta;
  std::optional<double> r;
  bool as_json = false;
};

void run_bound(const BoundOpts& opts) {
  const io::StateFile sf = io::read_state(opts.state_path);
  const int d = sf.hamiltonian.dim();
  if (opts.row < 0 || opts.row >= d || opts.col < 0 || opts.col >= d)
    throw domain_error("row/col outside the ladder");
  std::optional<channels::StochasticMatrix> transition;
  if (!opts.channel_path.empty()) {
    const channels::KrausChannel ch = io::read_channel(opts.channel_path);
    if (!ch.input_hamiltonian().same_spectrum(sf.hamiltonian))
      throw domain_error("channel input ladder does not match the state");
    transition = channels::induced_stochastic(ch);
  }
  std::optional<qstate::InverseTemperature> beta;
  if (opts.beta.has_value() || opts.r.has_value())
    beta = resolve_beta(opts.beta, opts.r, sf.hamiltonian);

  double value = 0.0;
  if (opts.which == "cptp" || opts.which == "symmetric") {
    if (!transition.has_value())
      throw domain_error("the " + opts.which + " bound needs --channel");
    const bounds::BoundQuery query{sf.rho, sf.hamiltonian, transition, beta,
                                   opts.row, opts.col};
    value = opts.which == "cptp" ? bounds::cptp_bound(query)
                                 : bounds::symmetric_bound(query);
  } else if (opts.which == "thermal") {
    if (!beta.has_value()) throw domain_error("the thermal bound needs --beta or --r");
    const bounds::BoundQuery query{sf.rho, sf.hamiltonian, transition, beta,
                                   opts.row, opts.col};
    value = bounds::thermal_bound(query);
  } else {
    throw domain_error("unknown bound '" + opts.which +
                       "' (known: cptp, symmetric, thermal)");
  }
  if (opts.as_json) {
    json out{{"which", opts.which}, {"row", opts.row}, {"col", opts.col},
             {"value", value}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << opts.which << " bound on (" << opts.row << "," << opts.col
              << "): " << hfmt(value) << "\n";
  }
}

// ------------------------- thermomajorize -------------------------

struct MajorizeOpts {
  std::string energies;
  std::string from;
  std::string to;
  std::optional<double> beta;
  std::optional<double> r;
  std::string curve_prefix;
  bool as_json = false;
};

void run_majorize(const MajorizeOpts& opts) {
  const qstate::HamiltonianSpec h(parse_list(opts.energies));
  const thermo::EnergyDistribution from(parse_list(opts.from), h);
  const thermo::EnergyDistribution to(parse_list(opts.to), h);
  const qstate::InverseTemperature beta = resolve_beta(opts.beta, opts.r, h);
  const bool forward = thermo::thermomajorizes(from, to, beta);
  const bool reverse = thermo::thermomajorizes(to, from, beta);
  const thermo::LorenzCurve from_curve = thermo::lorenz_curve(from, beta);
  const thermo::LorenzCurve to_curve = thermo::lorenz_curve(to, beta);
  if (!opts.curve_prefix.empty()) {
    io::write_lorenz_csv(opts.curve_prefix + "_from.csv", from_curve);
    io::write_lorenz_csv(opts.curve_prefix + "_to.csv", to_curve);
  }
  if (opts.as_json) {
    json out;
    out["forward"] = forward;
    out["reverse"] = reverse;
    out["from_curve"] = {{"x", from_curve.x}, {"y", from_curve.y}};
    out["to_curve"] = {{"x", to_curve.x}, {"y", to_curve.y}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "from reaches to: " << (forward ? "yes" : "no") << "\n";
  std::cout << "to reaches from: " << (reverse ? "yes" : "no") << "\n";
}

// ------------------------- region -------------------------

struct RegionOpts {
  double p = 0.0;
  double c = 0.0;
  std::optional<double> r;
  std::optional<double> beta;
  double gap = 1.0;
  std::string kinds = "symmetric,thermal,guaranteed,triangle";
  int grid = regions::default_grid;
  std::string out_dir = ".";
  std::string prefix = "region";
  bool as_json = false;
};

void run_region(const RegionOpts& opts) {
  if (opts.beta.has_value() && opts.r.has_value())
    throw domain_error("give --beta or --r, not both");
  std::optional<double> r = opts.r;
  if (opts.beta.has_value())
    r = regions::ground_population_from_beta(qstate::InverseTemperature(*opts.beta),
                                             opts.gap);
  std::filesystem::create_directories(opts.out_dir);
  std::vector<std::string> written;
  for (const std::string& kind : parse_names(opts.kinds)) {
    std::vector<io::RegionRow> rows;
    if (kind == "symmetric") {
      rows = io::region_rows(regions::symmetric_region(opts.p, opts.c, opts.grid));
    } else if (kind == "thermal" || kind == "guaranteed" || kind == "triangle") {
      if (!r.has_value()) throw domain_error(kind + " region needs --r or --beta");
      if (kind == "thermal")
        rows = io::region_rows(regions::thermal_region(opts.p, opts.c, *r, opts.grid));
      else if (kind == "guaranteed")
        rows = io::region_rows(regions::guaranteed_region(opts.p, opts.c, *r, opts.grid));
      else
        rows = io::region_rows(regions::triangle_region(opts.p, opts.c, *r), opts.p,
                               opts.c, *r);
    } else {
      throw domain_error("unknown region kind '" + kind +
                         "' (known: symmetric, thermal, guaranteed, triangle)");
    }
    const std::string path =
        (std::filesystem::path(opts.out_dir) / (opts.prefix + "_" + kind + ".csv"))
            .string();
    io::write_region_csv(path, rows);
    written.push_back(path);
  }
  if (opts.as_json) {
    std::cout << json{{"written", written}}.dump(2) << "\n";
  } else {
    for (const std::string& path : written) std::cout << path << "\n";
  }
}

// ------------------------- guaranteed -------------------------

struct GuaranteedOpts {
  std::string state_path;
  std::optional<double> p;
  std::optional<double> c;
  double q = 0.0;
  std::optional<double> beta;
  std::optional<double> r;
  double gap = 1.0;
  std::string out_path;
  bool as_json = false;
};

void run_guaranteed(const GuaranteedOpts& opts) {
  std::optional<io::StateFile> sf;
  if (!opts.state_path.empty()) {
    if (opts.p.has_value() || opts.c.has_value())
      throw domain_error("give --state or --p/--c, not both");
    sf = io::read_state(opts.state_path);
    if (sf->hamiltonian.dim() != 2)
      throw domain_error("the guaranteed construction is defined for qubits");
  } else {
    if (!opts.p.has_value() || !opts.c.has_value())
      throw domain_error("give --state or both --p and --c");
    Matrix rho(2, 2);
    rho << *opts.p, *opts.c, *opts.c, 1.0 - *opts.p;
    sf = io::StateFile{qstate::DensityMatrix(rho),
                       qstate::HamiltonianSpec({0.0, opts.gap})};
  }
  const qstate::InverseTemperature beta = resolve_beta(opts.beta, opts.r, sf->hamiltonian);
  const double gap = sf->hamiltonian.frequency(1, 0);
  const double r = regions::ground_population_from_beta(beta, gap);
  const double p = sf->rho.entry(0, 0).real();
  const double edge = thermo::extremal_incoherent(p, r);
  const double fraction = thermo::guaranteed_fraction(p, opts.q, r);
  const qstate::DensityMatrix sigma =
      thermo::guaranteed_state(sf->rho, sf->hamiltonian, beta, {opts.q, 1.0 - opts.q});
  if (!opts.out_path.empty()) io::write_state(opts.out_path, sigma, sf->hamiltonian);
  if (opts.as_json) {
    json out;
    out["fraction"] = fraction;
    out["edge_population"] = edge;
    out["sigma_re"] = matrix_json(sigma.matrix(), false);
    out["sigma_im"] = matrix_json(sigma.matrix(), true);
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "guaranteed fraction: " << hfmt(fraction) << "\n";
  std::cout << "incoherent edge population: " << hfmt(edge) << "\n";
  std::cout << "sigma:\n";
  print_matrix(sigma.matrix());
}

// ------------------------- verify -------------------------

struct VerifyOpts {
  std::string suite = "all";
  int samples = 10000;
  std::uint64_t seed = 42;
  std::string out_path;
};

json sweep_json(const oracle::SweepReport& report) {
  json failing = json::array();
  for (const oracle::SweepFailure& f : report.failing)
    failing.push_back({{"seed", f.seed}, {"what", f.what}, {"violation", f.violation}});
  return json{{"suite", report.suite},   {"samples", report.samples},
              {"failures", report.failures}, {"worst", report.worst},
              {"failing", std::move(failing)}, {"pass", report.pass}};
}

json saturation_json(const std::vector<oracle::SaturationReport>& reports) {
  json checks = json::array();
  bool pass = true;
  for (const oracle::SaturationReport& rep : reports) {
    pass = pass && rep.pass;
    checks.push_back({{"bound_id", rep.bound_id},
                      {"params", rep.params},
                      {"achieved", rep.achieved},
                      {"bound", rep.bound},
                      {"ratio", rep.ratio},
                      {"pass", rep.pass}});
  }
  return json{{"suite", "saturation"}, {"checks", std::move(checks)}, {"pass", pass}};
}

void run_verify(const VerifyOpts& opts) {
  const std::vector<std::string> known{"monotone", "dominance", "transition",
                                       "saturation", "qubit-equivalence"};
  std::vector<std::string> suites;
  if (opts.suite == "all") {
    suites = known;
  } else {
    for (const std::string& name : parse_names(opts.suite)) {
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw domain_error("unknown suite '" + name +
                           "' (known: monotone, dominance, transition, saturation, "
                           "qubit-equivalence, all)");
      suites.push_back(name);
    }
  }
  json report;
  report["seed"] = opts.seed;
  report["samples"] = opts.samples;
  report["suites"] = json::array();
  bool pass = true;
  for (const std::string& name : suites) {
    json entry;
    if (name == "monotone") {
      entry = sweep_json(oracle::monotone_sweep(opts.samples, opts.seed));
    } else if (name == "dominance") {
      entry = sweep_json(oracle::dominance_sweep(opts.samples, opts.seed));
    } else if (name == "transition") {
      entry = sweep_json(oracle::transition_sweep(opts.samples, opts.seed));
    } else if (name == "saturation") {
      entry = saturation_json(oracle::saturation_suite());
    } else {
      entry = sweep_json(
          oracle::qubit_equivalence_sweep(50, 50, {0.55, 0.6, 2.0 / 3.0, 0.75, 0.9}));
    }
    pass = pass && entry.at("pass").get<bool>();
    report["suites"].push_back(std::move(entry));
  }
  report["pass"] = pass;
  const std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path);
    if (!out) throw parse_error("cannot write '" + opts.out_path + "'");
    out << text << "\n";
  }
  if (!pass) g_status = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mode-resolved coherence processing under thermal constraints"};
  app.require_subcommand(1);

  DecomposeOpts decompose;
  CLI::App* cmd = app.add_subcommand("decompose", "split a state into coherence modes");
  cmd->add_option("--state", decompose.state_path, "state JSON file")->required();
  cmd->add_flag("--json", decompose.as_json, "machine-readable output");
  cmd->callback([&] { run_decompose(decompose); });

  CheckOpts check;
  cmd = app.add_subcommand("check-channel", "classify a Kraus operator list");
  cmd->add_option("--channel", check.channel_path, "channel JSON file")->required();
  cmd->add_option("--beta", check.betas, "inverse temperature(s) for the fixed-point check");
  cmd->add_option("--r", check.r, "thermal ground weight (two-level ladders)");
  cmd->add_flag("--json", check.as_json, "machine-readable output");
  cmd->callback([&] { run_check(check); });

  BoundOpts bound;
  cmd = app.add_subcommand("bound", "evaluate a coherence-transfer bound");
  cmd->add_option("--which", bound.which, "cptp | symmetric | thermal")->required();
  cmd->add_option("--state", bound.state_path, "state JSON file")->required();
  cmd->add_option("--row", bound.row, "output entry row")->required();
  cmd->add_option("--col", bound.col, "output entry column")->required();
  cmd->add_option("--channel", bound.channel_path, "channel JSON for the transition matrix");
  CLI::Option* bound_beta = cmd->add_option("--beta", bound.beta, "inverse temperature");
  cmd->add_option("--r", bound.r, "thermal ground weight (two-level ladders)")
      ->excludes(bound_beta);
  cmd->add_flag("--json", bound.as_json, "machine-readable output");
  cmd->callback([&] { run_bound(bound); });

  MajorizeOpts majorize;
  cmd = app.add_subcommand("thermomajorize", "compare rescaled majorization curves");
  cmd->add_option("--energies", majorize.energies, "comma-separated ladder")->required();
  cmd->add_option("--from", majorize.from, "comma-separated populations")->required();
  cmd->add_option("--to", majorize.to, "comma-separated populations")->required();
  CLI::Option* maj_beta = cmd->add_option("--beta", majorize.beta, "inverse temperature");
  cmd->add_option("--r", majorize.r, "thermal ground weight (two-level ladders)")
      ->excludes(maj_beta);
  cmd->add_option("--curve-out", majorize.curve_prefix,
                  "write <prefix>_from.csv and <prefix>_to.csv");
  cmd->add_flag("--json", majorize.as_json, "machine-readable output");
  cmd->callback([&] { run_majorize(majorize); });

  RegionOpts region;
  cmd = app.add_subcommand("region", "export achievable-region boundaries as CSV");
  cmd->add_option("--p", region.p, "initial ground population")->required();
  cmd->add_option("--c", region.c, "initial coherence (real)")->required();
  CLI::Option* region_r = cmd->add_option("--r", region.r, "thermal ground weight");
  cmd->add_option("--beta", region.beta, "inverse temperature")->excludes(region_r);
  cmd->add_option("--gap", region.gap, "level spacing used with --beta (default 1)");
  cmd->add_option("--kinds", region.kinds, "comma list of symmetric,thermal,guaranteed,triangle");
  cmd->add_option("--grid", region.grid, "population grid size");
  cmd->add_option("--out-dir", region.out_dir, "output directory (default .)");
  cmd->add_option("--prefix", region.prefix, "output file prefix (default region)");
  cmd->add_flag("--json", region.as_json, "machine-readable output");
  cmd->callback([&] { run_region(region); });

  GuaranteedOpts guaranteed;
  cmd = app.add_subcommand("guaranteed", "guaranteed coherence for a population change");
  cmd->add_option("--state", guaranteed.state_path, "state JSON file (qubit)");
  cmd->add_option("--p", guaranteed.p, "initial ground population");
  cmd->add_option("--c", guaranteed.c, "initial coherence (real)");
  cmd->add_option("--q", guaranteed.q, "target ground population")->required();
  CLI::Option* guar_beta = cmd->add_option("--beta", guaranteed.beta, "inverse temperature");
  cmd->add_option("--r", guaranteed.r, "thermal ground weight")->excludes(guar_beta);
  cmd->add_option("--gap", guaranteed.gap, "level spacing for --p/--c input (default 1)");
  cmd->add_option("--out", guaranteed.out_path, "write the guaranteed state JSON here");
  cmd->add_flag("--json", guaranteed.as_json, "machine-readable output");
  cmd->callback([&] { run_guaranteed(guaranteed); });

  VerifyOpts verify;
  cmd = app.add_subcommand("verify", "run the randomized verification suites");
  cmd->add_option("--suite", verify.suite,
                  "monotone | dominance | transition | saturation | "
                  "qubit-equivalence | all (or a comma list)");
  cmd->add_option("--samples", verify.samples, "samples per randomized suite");
  cmd->add_option("--seed", verify.seed, "base seed");
  cmd->add_option("--out", verify.out_path, "also write the JSON report here");
  cmd->callback([&] { run_verify(verify); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  } catch (const parse_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return g_status;
}
