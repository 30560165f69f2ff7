#pragma once
// Shared aliases, error types, pinned numeric tolerances, and the
// deterministic random primitives used by the sampling-based checks.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace modeflow {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Contract violation on otherwise well-formed input (CLI exit code 1).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or unparseable payload (CLI exit code 2).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// ------------------------- tolerances -------------------------
// Pinned once here; every construction check and property slack refers
// to these so tests and library agree by construction.
namespace tol {
inline constexpr double hermitian = 1e-12;          // max |rho - rho^dagger| entry
inline constexpr double trace = 1e-12;              // |tr(rho) - 1|
inline constexpr double psd = 1e-12;                // min eigenvalue >= -psd
inline constexpr double completeness = 1e-10;       // Frobenius |sum W^dag W - I|
inline constexpr double stochastic_entry = 1e-12;   // entries inside [0,1]
inline constexpr double stochastic_column = 1e-10;  // column sums near 1
inline constexpr double distribution_sum = 1e-10;   // probability vectors
inline constexpr double frequency = 1e-9;           // Bohr-frequency bucketing
inline constexpr double symmetric_support = 1e-10;  // covariance leak threshold
inline constexpr double gibbs_preserving = 1e-10;   // thermal fixed-point check
inline constexpr double covariance_transport = 1e-10;
inline constexpr double monotone = 1e-10;           // single-shot monotone slack
inline constexpr double sweep = 1e-9;               // slack for randomized sweeps
inline constexpr double lorenz = 1e-12;             // majorization curve slack
inline constexpr double bisection = 1e-10;          // scalar searches
}  // namespace tol

inline bool nearly_equal(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance;
}

// ------------------------- deterministic randomness -------------------------
// std::uniform_real_distribution / std::normal_distribution are
// implementation-defined, so seeded sweeps would not be reproducible across
// standard libraries.  Everything random is derived from the raw 64-bit
// engine output instead.

// Uniform double in [0, 1) with 53 random mantissa bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller on uniform01.
inline double gaussian(std::mt19937_64& gen) {
  double u = 0.0;
  do {
    u = uniform01(gen);
  } while (u <= 0.0);
  const double v = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

inline Complex complex_gaussian(std::mt19937_64& gen) {
  const double re = gaussian(gen);
  const double im = gaussian(gen);
  return Complex(re, im) / std::sqrt(2.0);
}

}  // namespace modeflow
