#pragma once
// Kraus channels between fixed energy ladders, the level-transition matrix a
// channel induces on populations, covariance / thermal-fixed-point checks,
// and the explicit channel constructions that saturate the coherence bounds.

#include <vector>

#include "modeflow/common.hpp"
#include "modeflow/qstate.hpp"

namespace modeflow::channels {

using qstate::DensityMatrix;
using qstate::HamiltonianSpec;
using qstate::InverseTemperature;

// Completely positive trace-preserving map given by Kraus operators
// (each d_out x d_in).  Completeness sum W^dag W = I is enforced at
// construction within the Frobenius tolerance.
class KrausChannel {
 public:
  KrausChannel(std::vector<Matrix> operators, HamiltonianSpec input,
               HamiltonianSpec output);

  const std::vector<Matrix>& operators() const { return operators_; }
  const HamiltonianSpec& input_hamiltonian() const { return input_; }
  const HamiltonianSpec& output_hamiltonian() const { return output_; }
  int input_dim() const { return input_.dim(); }
  int output_dim() const { return output_.dim(); }
  bool is_square() const { return input_dim() == output_dim(); }

  // Frobenius norm of sum W^dag W - I; usable on unvalidated operator lists.
  static double completeness_violation(const std::vector<Matrix>& operators);

 private:
  std::vector<Matrix> operators_;
  HamiltonianSpec input_;
  HamiltonianSpec output_;
};

// Column-stochastic matrix of level-transition probabilities p(out | in).
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Eigen::MatrixXd probabilities);
  int output_dim() const { return static_cast<int>(probabilities_.rows()); }
  int input_dim() const { return static_cast<int>(probabilities_.cols()); }
  double prob(int out, int in) const { return probabilities_(out, in); }
  const Eigen::MatrixXd& matrix() const { return probabilities_; }

 private:
  Eigen::MatrixXd probabilities_;
};

struct SymmetryCheck {
  bool symmetric = false;
  double violation = 0.0;  // largest output magnitude leaked across modes
};

struct GibbsCheck {
  bool preserving = false;
  double violation = 0.0;  // max entrywise deviation from the thermal state
};

// Diagnostic summary for a (possibly unvalidated) operator list.
struct ChannelClassReport {
  bool trace_preserving = false;
  double completeness_violation = 0.0;
  SymmetryCheck symmetry;
  std::vector<std::pair<double, GibbsCheck>> gibbs;  // one entry per queried beta
};

// Channel action.  The DensityMatrix overload revalidates the output state;
// the raw overload propagates arbitrary operators (modes, basis elements).
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
Matrix apply_matrix(const KrausChannel& ch, const Matrix& op);

// p(n | c) = sum_a |W_a(n, c)|^2.
StochasticMatrix induced_stochastic(const KrausChannel& ch);

// True when every input basis element |c><d| maps into output entries of the
// same Bohr frequency; equivalent to commuting with the free evolution.
SymmetryCheck check_symmetric(const KrausChannel& ch);

// True when the channel fixes the thermal state of its (square) ladder.
GibbsCheck check_gibbs_preserving(const KrausChannel& ch,
                                  const InverseTemperature& beta);

// Full report over raw operators, so completeness failures are reported
// rather than thrown.
ChannelClassReport classify(const std::vector<Matrix>& operators,
                            const HamiltonianSpec& input,
                            const HamiltonianSpec& output,
                            const std::vector<InverseTemperature>& betas);

// Mixes two channels on the same ladders with probability `weight_first`.
KrausChannel convex_combine(const KrausChannel& a, const KrausChannel& b,
                            double weight_first);

// Runs `first`, then `second` (matching ladders required).
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

enum class ShiftDirection { down, up };

// Equidistant-qutrit coherence shift built from a truncated oscillator bath:
// `down` moves the upper-gap coherence onto the lower gap losslessly (up to
// an exponentially small truncation remainder), `up` moves it back at the
// thermal exchange rate.
KrausChannel shift_channel(ShiftDirection direction, const InverseTemperature& beta,
                           double gap, int bath_levels);

// Equidistant-qutrit merge: sends (a, b) coherences on the two gaps to
// sqrt(1 - x^2) a + x b on the lower gap.
KrausChannel merge_channel(double mixing, double gap = 1.0);

// Qubit channel with the largest coherence multiplier among population
// processors taking ground weight p to q without temperature constraints.
KrausChannel qubit_extremal_symmetric_channel(double p, double q, double gap = 1.0);

}  // namespace modeflow::channels
