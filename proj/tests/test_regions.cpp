#include <doctest.h>

#include <cmath>

#include "modeflow/bounds.hpp"
#include "modeflow/regions.hpp"

using namespace modeflow;
using namespace modeflow::regions;

namespace {

const RegionSample* sample_at(const RegionBoundary& boundary, double q) {
  for (const RegionSample& s : boundary.samples) {
    if (std::abs(s.q - q) < 1e-9) return &s;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("regions") {

TEST_CASE("population grid and symmetric boundary") {
  const RegionBoundary sym = symmetric_region(0.5, 0.4);
  CHECK(sym.kind == RegionKind::symmetric);
  CHECK(sym.grid == default_grid);
  CHECK(static_cast<int>(sym.samples.size()) == default_grid);
  CHECK(std::abs(sym.samples.front().q - grid_low) < 1e-15);
  CHECK(std::abs(sym.samples.back().q - grid_high) < 1e-12);
  CHECK(std::isnan(sym.r));

  // keeping the population keeps all the coherence
  const RegionSample* fixed = sample_at(sym, 0.5);
  REQUIRE(fixed != nullptr);
  CHECK(std::abs(fixed->coherence - 0.4) < 1e-12);

  // every sample matches the closed form
  for (const RegionSample& s : sym.samples) {
    CHECK(std::abs(s.coherence - bounds::qubit_symmetric_bound(0.5, s.q, 0.4)) <
          1e-15);
  }

  // Bloch points: x doubles the coherence, z recenters the population
  const auto pts = sym.points();
  REQUIRE(pts.size() == sym.samples.size());
  CHECK(std::abs(pts[100].x - 2.0 * sym.samples[100].coherence) < 1e-15);
  CHECK(std::abs(pts[100].z - (2.0 * sym.samples[100].q - 1.0)) < 1e-15);

  const RegionBoundary flat = symmetric_region(0.3, 0.0);
  for (const RegionSample& s : flat.samples) CHECK(s.coherence == 0.0);

  CHECK_THROWS_AS(symmetric_region(0.5, 0.6), domain_error);   // over the PSD cap
  CHECK_THROWS_AS(symmetric_region(0.0, 0.1), domain_error);
  CHECK_THROWS_AS(symmetric_region(0.5, 0.4, 1), domain_error);
}

TEST_CASE("thermal boundary lives on the reachable window inside the symmetric one") {
  const double r = 2.0 / 3.0;
  const RegionBoundary thermal = thermal_region(0.5, 0.4, r);
  CHECK(thermal.kind == RegionKind::thermal);
  CHECK(thermal.samples.size() == 51);  // grid points in [0.5, 0.75]
  CHECK(thermal.samples.front().q >= 0.5 - 1e-9);
  CHECK(thermal.samples.back().q <= 0.75 + 1e-9);

  const RegionSample* fixed = sample_at(thermal, 0.5);
  REQUIRE(fixed != nullptr);
  CHECK(std::abs(fixed->coherence - 0.4) < 1e-12);

  for (const RegionSample& s : thermal.samples) {
    CHECK(s.coherence <= bounds::qubit_symmetric_bound(0.5, s.q, 0.4) + 1e-12);
  }

  CHECK_THROWS_AS(thermal_region(0.5, 0.4, 0.5, 201), domain_error);  // p = r
  CHECK_THROWS_AS(thermal_region(0.5, 0.4, 1.0, 201), domain_error);
}

TEST_CASE("always-achievable triangle") {
  const auto tri = triangle_region(0.5, 0.45, 2.0 / 3.0);
  CHECK(std::abs(tri[0].x - 0.9) < 1e-15);
  CHECK(std::abs(tri[0].z - 0.0) < 1e-15);
  CHECK(tri[1].x == 0.0);
  CHECK(std::abs(tri[1].z - 0.0) < 1e-15);
  CHECK(tri[2].x == 0.0);
  CHECK(std::abs(tri[2].z - 0.5) < 1e-15);  // farthest incoherent point q = 0.75

  // at p = r nothing moves: the triangle degenerates to a segment
  const auto pinned = triangle_region(2.0 / 3.0, 0.2, 2.0 / 3.0);
  CHECK(std::abs(pinned[2].z - pinned[1].z) < 1e-15);
}

TEST_CASE("guaranteed boundary sits inside the thermal one on the same window") {
  const double r = 2.0 / 3.0;
  const RegionBoundary guaranteed = guaranteed_region(0.5, 0.4, r);
  const RegionBoundary thermal = thermal_region(0.5, 0.4, r);
  REQUIRE(guaranteed.samples.size() == thermal.samples.size());
  for (std::size_t i = 0; i < guaranteed.samples.size(); ++i) {
    CHECK(std::abs(guaranteed.samples[i].q - thermal.samples[i].q) < 1e-12);
    CHECK(guaranteed.samples[i].coherence <= thermal.samples[i].coherence + 1e-12);
  }

  const RegionSample* fixed = sample_at(guaranteed, 0.5);
  REQUIRE(fixed != nullptr);
  CHECK(std::abs(fixed->coherence - 0.4) < 1e-12);

  // near the far edge only the residual fraction of the coherence survives
  const RegionSample* far = sample_at(guaranteed, 0.7475);
  REQUIRE(far != nullptr);
  CHECK(std::abs(far->coherence - 0.01 * 0.4) < 1e-12);
}

TEST_CASE("temperature and ground population conversions") {
  CHECK(std::abs(ground_population_from_beta(InverseTemperature(std::log(2.0)), 1.0) -
                 2.0 / 3.0) < 1e-15);
  CHECK(ground_population_from_beta(InverseTemperature::infinity(), 1.0) == 1.0);
  CHECK(std::abs(ground_population_from_beta(InverseTemperature(0.0), 1.0) - 0.5) <
        1e-15);

  CHECK(std::abs(beta_from_ground_population(2.0 / 3.0, 1.0).value() - std::log(2.0)) <
        1e-12);
  CHECK(beta_from_ground_population(1.0, 1.0).is_infinite());
  CHECK(beta_from_ground_population(0.5, 1.0).value() == 0.0);
  CHECK_THROWS_AS(beta_from_ground_population(0.3, 1.0), domain_error);
  CHECK_THROWS_AS(beta_from_ground_population(0.7, 0.0), domain_error);

  // round trip at a couple of gaps
  for (double gap : {0.5, 1.0, 2.0}) {
    const double r = ground_population_from_beta(InverseTemperature(0.8), gap);
    CHECK(std::abs(beta_from_ground_population(r, gap).value() - 0.8) < 1e-12);
  }
}

}  // TEST_SUITE
