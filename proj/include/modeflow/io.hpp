#pragma once
// File formats: JSON for states and channels (energies + dense real/imag
// parts), CSV for majorization curves and region boundaries.  Read failures
// throw parse_error; semantic violations inside well-formed files throw
// domain_error, matching the CLI exit-code split.

#include <array>
#include <string>
#include <vector>

#include "modeflow/channels.hpp"
#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"
#include "modeflow/regions.hpp"
#include "modeflow/thermo.hpp"

namespace modeflow::io {

// Shortest-exact decimal form (17 significant digits).
std::string format_number(double value);

// ------------------------- states -------------------------
// {"energies": [...], "rho_re": [[...]], "rho_im": [[...]]}
// rho_im may be omitted for real states.

struct StateFile {
  qstate::DensityMatrix rho;
  qstate::HamiltonianSpec hamiltonian;
};

StateFile read_state(const std::string& path);
void write_state(const std::string& path, const qstate::DensityMatrix& rho,
                 const qstate::HamiltonianSpec& h);

// ------------------------- channels -------------------------
// {"energies_in": [...], "energies_out": [...],
//  "kraus": [{"re": [[...]], "im": [[...]]}, ...]}
// "energies" may replace the pair when both ladders coincide.

struct RawChannelFile {
  std::vector<Matrix> operators;
  qstate::HamiltonianSpec input;
  qstate::HamiltonianSpec output;
};

// Raw operator list: no completeness requirement, for diagnostics.
RawChannelFile read_channel_raw(const std::string& path);

// Validated channel (throws domain_error when completeness fails).
channels::KrausChannel read_channel(const std::string& path);
void write_channel(const std::string& path, const channels::KrausChannel& ch);

// ------------------------- curves -------------------------

void write_lorenz_csv(const std::string& path, const thermo::LorenzCurve& curve);
thermo::LorenzCurve read_lorenz_csv(const std::string& path);

// ------------------------- regions -------------------------
// One row per boundary sample; columns kind,p,c,r,q,d,x,z with x = 2 d and
// z = 2 q - 1 (r is nan for temperature-free rows).

struct RegionRow {
  std::string kind;
  double p = 0.0;
  double c = 0.0;
  double r = 0.0;
  double q = 0.0;
  double d = 0.0;
  double x = 0.0;
  double z = 0.0;
};

std::vector<RegionRow> region_rows(const regions::RegionBoundary& boundary);
std::vector<RegionRow> region_rows(const std::array<regions::BlochPoint, 3>& triangle,
                                   double p, double c, double r);

void write_region_csv(const std::string& path, const std::vector<RegionRow>& rows);
std::vector<RegionRow> read_region_csv(const std::string& path);

}  // namespace modeflow::io
