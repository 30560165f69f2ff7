#include "modeflow/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace modeflow::io {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& error) {
    throw parse_error("invalid JSON in '" + path + "': " + error.what());
  }
}

void dump_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw parse_error("failed while writing '" + path + "'");
}

json matrix_part_json(const Matrix& m, bool imaginary) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& re, const json* im) {
  if (!re.is_array() || re.empty() || !re.at(0).is_array())
    throw parse_error("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(re.size());
  const int cols = static_cast<int>(re.at(0).size());
  if (cols == 0) throw parse_error("matrix rows must not be empty");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = re.at(r);
    if (static_cast<int>(row.size()) != cols) throw parse_error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(row.at(c).get<double>(), 0.0);
  }
  if (im != nullptr) {
    if (static_cast<int>(im->size()) != rows)
      throw parse_error("real and imaginary parts differ in shape");
    for (int r = 0; r < rows; ++r) {
      const json& row = im->at(r);
      if (static_cast<int>(row.size()) != cols)
        throw parse_error("real and imaginary parts differ in shape");
      for (int c = 0; c < cols; ++c) m(r, c) += Complex(0.0, row.at(c).get<double>());
    }
  }
  return m;
}

double parse_field(const std::string& field) {
  if (field.empty()) throw parse_error("empty numeric field");
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size())
    throw parse_error("bad numeric field '" + field + "'");
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// ------------------------- states -------------------------

StateFile read_state(const std::string& path) {
  const json j = load_json(path);
  try {
    std::vector<double> energies = j.at("energies").get<std::vector<double>>();
    const json* im = j.contains("rho_im") ? &j.at("rho_im") : nullptr;
    Matrix rho = matrix_from_json(j.at("rho_re"), im);
    qstate::HamiltonianSpec h(std::move(energies));
    if (rho.rows() != h.dim() || rho.cols() != h.dim())
      throw domain_error("state dimension does not match the ladder");
    return StateFile{qstate::DensityMatrix(std::move(rho)), std::move(h)};
  } catch (const json::exception& error) {
    throw parse_error("invalid state file '" + path + "': " + error.what());
  }
}

void write_state(const std::string& path, const qstate::DensityMatrix& rho,
                 const qstate::HamiltonianSpec& h) {
  if (rho.dim() != h.dim()) throw domain_error("state dimension does not match the ladder");
  json j;
  j["energies"] = h.energies();
  j["rho_re"] = matrix_part_json(rho.matrix(), false);
  j["rho_im"] = matrix_part_json(rho.matrix(), true);
  dump_json(path, j);
}

// ------------------------- channels -------------------------

RawChannelFile read_channel_raw(const std::string& path) {
  const json j = load_json(path);
  try {
    std::vector<double> energies_in;
    std::vector<double> energies_out;
    if (j.contains("energies")) {
      if (j.contains("energies_in") || j.contains("energies_out"))
        throw parse_error("give either 'energies' or the in/out pair, not both");
      energies_in = j.at("energies").get<std::vector<double>>();
      energies_out = energies_in;
    } else {
      energies_in = j.at("energies_in").get<std::vector<double>>();
      energies_out = j.at("energies_out").get<std::vector<double>>();
    }
    const json& kraus = j.at("kraus");
    if (!kraus.is_array() || kraus.empty())
      throw parse_error("'kraus' must be a non-empty array");
    qstate::HamiltonianSpec input(std::move(energies_in));
    qstate::HamiltonianSpec output(std::move(energies_out));
    std::vector<Matrix> operators;
    operators.reserve(kraus.size());
    for (const json& item : kraus) {
      const json* im = item.contains("im") ? &item.at("im") : nullptr;
      Matrix w = matrix_from_json(item.at("re"), im);
      if (w.rows() != output.dim() || w.cols() != input.dim())
        throw domain_error("operator shape does not match the ladders");
      operators.push_back(std::move(w));
    }
    return RawChannelFile{std::move(operators), std::move(input), std::move(output)};
  } catch (const json::exception& error) {
    throw parse_error("invalid channel file '" + path + "': " + error.what());
  }
}

channels::KrausChannel read_channel(const std::string& path) {
  RawChannelFile raw = read_channel_raw(path);
  return channels::KrausChannel(std::move(raw.operators), std::move(raw.input),
                                std::move(raw.output));
}

void write_channel(const std::string& path, const channels::KrausChannel& ch) {
  json j;
  if (ch.is_square() &&
      ch.input_hamiltonian().same_spectrum(ch.output_hamiltonian(), 0.0)) {
    j["energies"] = ch.input_hamiltonian().energies();
  } else {
    j["energies_in"] = ch.input_hamiltonian().energies();
    j["energies_out"] = ch.output_hamiltonian().energies();
  }
  json kraus = json::array();
  for (const Matrix& w : ch.operators()) {
    json item;
    item["re"] = matrix_part_json(w, false);
    item["im"] = matrix_part_json(w, true);
    kraus.push_back(std::move(item));
  }
  j["kraus"] = std::move(kraus);
  dump_json(path, j);
}

// ------------------------- curves -------------------------

void write_lorenz_csv(const std::string& path, const thermo::LorenzCurve& curve) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << "x,y\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i)
    out << format_number(curve.x[i]) << ',' << format_number(curve.y[i]) << '\n';
  if (!out) throw parse_error("failed while writing '" + path + "'");
}

thermo::LorenzCurve read_lorenz_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "x,y")
    throw parse_error("missing 'x,y' header in '" + path + "'");
  thermo::LorenzCurve curve;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 2) throw parse_error("expected 2 fields per row in '" + path + "'");
    curve.x.push_back(parse_field(fields[0]));
    curve.y.push_back(parse_field(fields[1]));
  }
  return curve;
}

// ------------------------- regions -------------------------

namespace {
constexpr const char* kRegionComment =
    "# Bloch coordinates: x = 2 d, z = 2 q - 1; the ground state sits at z = +1.";
constexpr const char* kRegionHeader = "kind,p,c,r,q,d,x,z";
}  // namespace

std::vector<RegionRow> region_rows(const regions::RegionBoundary& boundary) {
  std::vector<RegionRow> rows;
  rows.reserve(boundary.samples.size());
  const std::string kind = regions::kind_name(boundary.kind);
  for (const regions::RegionSample& sample : boundary.samples) {
    rows.push_back(RegionRow{kind, boundary.p, boundary.c, boundary.r, sample.q,
                             sample.coherence, 2.0 * sample.coherence,
                             2.0 * sample.q - 1.0});
  }
  return rows;
}

std::vector<RegionRow> region_rows(const std::array<regions::BlochPoint, 3>& triangle,
                                   double p, double c, double r) {
  std::vector<RegionRow> rows;
  rows.reserve(triangle.size());
  for (const regions::BlochPoint& point : triangle) {
    rows.push_back(RegionRow{"triangle", p, c, r, 0.5 * (point.z + 1.0), 0.5 * point.x,
                             point.x, point.z});
  }
  return rows;
}

void write_region_csv(const std::string& path, const std::vector<RegionRow>& rows) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << kRegionComment << '\n' << kRegionHeader << '\n';
  for (const RegionRow& row : rows) {
    out << row.kind << ',' << format_number(row.p) << ',' << format_number(row.c) << ','
        << format_number(row.r) << ',' << format_number(row.q) << ','
        << format_number(row.d) << ',' << format_number(row.x) << ','
        << format_number(row.z) << '\n';
  }
  if (!out) throw parse_error("failed while writing '" + path + "'");
}

std::vector<RegionRow> read_region_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::vector<RegionRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kRegionHeader)
        throw parse_error("missing '" + std::string(kRegionHeader) + "' header in '" +
                          path + "'");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 8) throw parse_error("expected 8 fields per row in '" + path + "'");
    RegionRow row;
    row.kind = fields[0];
    row.p = parse_field(fields[1]);
    row.c = parse_field(fields[2]);
    row.r = parse_field(fields[3]);
    row.q = parse_field(fields[4]);
    row.d = parse_field(fields[5]);
    row.x = parse_field(fields[6]);
    row.z = parse_field(fields[7]);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw parse_error("missing header in '" + path + "'");
  return rows;
}

}  // namespace modeflow::io
