#include "modeflow/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace modeflow::channels {

namespace {

Matrix apply_raw(const std::vector<Matrix>& ops, const Matrix& op) {
  Matrix out = Matrix::Zero(ops.front().rows(), ops.front().rows());
  for (const Matrix& w : ops) out += w * op * w.adjoint();
  return out;
}

SymmetryCheck check_symmetric_raw(const std::vector<Matrix>& ops,
                                  const HamiltonianSpec& input,
                                  const HamiltonianSpec& output) {
  double violation = 0.0;
  Matrix basis = Matrix::Zero(input.dim(), input.dim());
  for (int c = 0; c < input.dim(); ++c) {
    for (int d = 0; d < input.dim(); ++d) {
      basis.setZero();
      basis(c, d) = 1.0;
      const Matrix image = apply_raw(ops, basis);
      const double omega_in = input.frequency(c, d);
      for (int n = 0; n < output.dim(); ++n) {
        for (int m = 0; m < output.dim(); ++m) {
          if (nearly_equal(output.frequency(n, m), omega_in, tol::frequency)) continue;
          violation = std::max(violation, std::abs(image(n, m)));
        }
      }
    }
  }
  return {violation <= tol::symmetric_support, violation};
}

GibbsCheck check_gibbs_raw(const std::vector<Matrix>& ops,
                           const HamiltonianSpec& input,
                           const HamiltonianSpec& output,
                           const InverseTemperature& beta) {
  const Matrix fixed_in = qstate::gibbs_state(input, beta).matrix();
  const Matrix fixed_out = qstate::gibbs_state(output, beta).matrix();
  const double violation = (apply_raw(ops, fixed_in) - fixed_out).cwiseAbs().maxCoeff();
  return {violation <= tol::gibbs_preserving, violation};
}

void require_operator_shapes(const std::vector<Matrix>& ops,
                             const HamiltonianSpec& input,
                             const HamiltonianSpec& output) {
  if (ops.empty()) {
    throw domain_error("KrausChannel: need at least one operator");
  }
  for (const Matrix& w : ops) {
    if (w.rows() != output.dim() || w.cols() != input.dim()) {
      throw domain_error("KrausChannel: operator shape must be d_out x d_in");
    }
    if (!w.allFinite()) {
      throw domain_error("KrausChannel: operators must be finite");
    }
  }
}

}  // namespace

// ------------------------- KrausChannel -------------------------

KrausChannel::KrausChannel(std::vector<Matrix> operators, HamiltonianSpec input,
                           HamiltonianSpec output)
    : operators_(std::move(operators)),
      input_(std::move(input)),
      output_(std::move(output)) {
  require_operator_shapes(operators_, input_, output_);
  const double gap = completeness_violation(operators_);
  if (gap > tol::completeness) {
    throw domain_error("KrausChannel: operators do not sum to a trace-preserving map");
  }
}

double KrausChannel::completeness_violation(const std::vector<Matrix>& operators) {
  if (operators.empty()) return std::numeric_limits<double>::infinity();
  const auto d_in = operators.front().cols();
  Matrix sum = Matrix::Zero(d_in, d_in);
  for (const Matrix& w : operators) sum += w.adjoint() * w;
  return (sum - Matrix::Identity(d_in, d_in)).norm();
}

// ------------------------- StochasticMatrix -------------------------

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.rows() < 1 || probabilities_.cols() < 1) {
    throw domain_error("StochasticMatrix: empty matrix");
  }
  if (!probabilities_.allFinite()) {
    throw domain_error("StochasticMatrix: entries must be finite");
  }
  if (probabilities_.minCoeff() < -tol::stochastic_entry ||
      probabilities_.maxCoeff() > 1.0 + tol::stochastic_entry) {
    throw domain_error("StochasticMatrix: entries must lie in [0, 1]");
  }
  for (int c = 0; c < probabilities_.cols(); ++c) {
    if (std::abs(probabilities_.col(c).sum() - 1.0) > tol::stochastic_column) {
      throw domain_error("StochasticMatrix: columns must sum to 1");
    }
  }
}

// ------------------------- channel action -------------------------

Matrix apply_matrix(const KrausChannel& ch, const Matrix& op) {
  if (op.rows() != ch.input_dim() || op.cols() != ch.input_dim()) {
    throw domain_error("apply: operator dimension does not match the channel input");
  }
  return apply_raw(ch.operators(), op);
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_matrix(ch, rho.matrix()));
}

StochasticMatrix induced_stochastic(const KrausChannel& ch) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(ch.output_dim(), ch.input_dim());
  for (const Matrix& w : ch.operators()) {
    p += w.cwiseAbs2();
  }
  return StochasticMatrix(std::move(p));
}

SymmetryCheck check_symmetric(const KrausChannel& ch) {
  return check_symmetric_raw(ch.operators(), ch.input_hamiltonian(),
                             ch.output_hamiltonian());
}

GibbsCheck check_gibbs_preserving(const KrausChannel& ch,
                                  const InverseTemperature& beta) {
  if (!ch.is_square()) {
    throw domain_error("check_gibbs_preserving: channel must be square");
  }
  return check_gibbs_raw(ch.operators(), ch.input_hamiltonian(),
                         ch.output_hamiltonian(), beta);
}

ChannelClassReport classify(const std::vector<Matrix>& operators,
                            const HamiltonianSpec& input,
                            const HamiltonianSpec& output,
                            const std::vector<InverseTemperature>& betas) {
  require_operator_shapes(operators, input, output);
  ChannelClassReport report;
  report.completeness_violation = KrausChannel::completeness_violation(operators);
  report.trace_preserving = report.completeness_violation <= tol::completeness;
  report.symmetry = check_symmetric_raw(operators, input, output);
  if (!betas.empty() && input.dim() != output.dim()) {
    throw domain_error("classify: thermal fixed-point check needs a square channel");
  }
  for (const InverseTemperature& beta : betas) {
    report.gibbs.emplace_back(beta.value(),
                              check_gibbs_raw(operators, input, output, beta));
  }
  return report;
}

// ------------------------- combinations -------------------------

KrausChannel convex_combine(const KrausChannel& a, const KrausChannel& b,
                            double weight_first) {
  if (!(weight_first >= 0.0 && weight_first <= 1.0)) {
    throw domain_error("convex_combine: weight must lie in [0, 1]");
  }
  if (!a.input_hamiltonian().same_spectrum(b.input_hamiltonian()) ||
      !a.output_hamiltonian().same_spectrum(b.output_hamiltonian())) {
    throw domain_error("convex_combine: channels must share input and output ladders");
  }
  std::vector<Matrix> ops;
  ops.reserve(a.operators().size() + b.operators().size());
  const double wa = std::sqrt(weight_first);
  const double wb = std::sqrt(1.0 - weight_first);
  if (wa > 0.0) {
    for (const Matrix& w : a.operators()) ops.push_back(wa * w);
  }
  if (wb > 0.0) {
    for (const Matrix& w : b.operators()) ops.push_back(wb * w);
  }
  return KrausChannel(std::move(ops), a.input_hamiltonian(), a.output_hamiltonian());
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (!first.output_hamiltonian().same_spectrum(second.input_hamiltonian())) {
    throw domain_error("compose: inner ladders do not match");
  }
  std::vector<Matrix> ops;
  ops.reserve(first.operators().size() * second.operators().size());
  for (const Matrix& s : second.operators()) {
    for (const Matrix& f : first.operators()) {
      Matrix product = s * f;
      if (product.norm() > 0.0) ops.push_back(std::move(product));
    }
  }
  return KrausChannel(std::move(ops), first.input_hamiltonian(),
                      second.output_hamiltonian());
}

// ------------------------- shift channel -------------------------

KrausChannel shift_channel(ShiftDirection direction, const InverseTemperature& beta,
                           double gap, int bath_levels) {
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("shift_channel: gap must be positive and finite");
  }
  if (bath_levels < 3) {
    throw domain_error("shift_channel: need at least three bath levels");
  }
  const int n = bath_levels;
  const auto joint = [n](int sys, int bath) { return sys * n + bath; };

  // Joint permutation: within each total-energy shell the three states
  // (2, i-2) -> (1, i-1) -> (0, i) -> (2, i-2) cycle; the first excited shell
  // swaps (1, 0) <-> (0, 1); shells sticking out of the truncated bath are
  // left on the identity so the map stays unitary.
  std::vector<int> perm(3 * n);
  std::iota(perm.begin(), perm.end(), 0);
  perm[joint(1, 0)] = joint(0, 1);
  perm[joint(0, 1)] = joint(1, 0);
  for (int shell = 2; shell <= n - 1; ++shell) {
    perm[joint(2, shell - 2)] = joint(1, shell - 1);
    perm[joint(1, shell - 1)] = joint(0, shell);
    perm[joint(0, shell)] = joint(2, shell - 2);
  }
  if (direction == ShiftDirection::up) {
    std::vector<int> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<int>(i);
    perm = std::move(inverse);
  }

  // Truncated oscillator-bath weights (uniform at beta = 0, ground-only at
  // beta = +infinity).
  std::vector<double> weight(n, 0.0);
  if (beta.is_infinite()) {
    weight[0] = 1.0;
  } else {
    double z = 0.0;
    for (int a = 0; a < n; ++a) {
      weight[a] = std::exp(-beta.value() * gap * a);
      z += weight[a];
    }
    for (int a = 0; a < n; ++a) weight[a] /= z;
  }

  // Contract the joint permutation against the bath: one operator per
  // populated (prepared, observed) bath pair.
  std::vector<Matrix> ops;
  for (int a = 0; a < n; ++a) {
    if (weight[a] <= 0.0) continue;
    std::map<int, Matrix> by_observed;
    for (int s = 0; s < 3; ++s) {
      const int dst = perm[joint(s, a)];
      const int s_out = dst / n;
      const int b = dst % n;
      auto [it, inserted] = by_observed.try_emplace(b, Matrix::Zero(3, 3));
      it->second(s_out, s) = std::sqrt(weight[a]);
    }
    for (auto& [b, w] : by_observed) ops.push_back(std::move(w));
  }

  HamiltonianSpec ladder({0.0, gap, 2.0 * gap});
  return KrausChannel(std::move(ops), ladder, ladder);
}

// ------------------------- merge channel -------------------------

KrausChannel merge_channel(double mixing, double gap) {
  if (!(mixing >= 0.0 && mixing <= 1.0)) {
    throw domain_error("merge_channel: mixing must lie in [0, 1]");
  }
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("merge_channel: gap must be positive and finite");
  }
  const double keep = std::sqrt(1.0 - mixing * mixing);
  const double norm = 1.0 / std::sqrt(3.0);
  std::vector<Matrix> ops;
  for (int j = 0; j < 3; ++j) {
    const Complex phase = std::exp(Complex(0.0, 2.0 * M_PI * j / 3.0));
    Matrix w = Matrix::Zero(3, 3);
    w(0, 0) = phase;
    w(0, 1) = mixing;
    w(1, 1) = phase * keep;
    w(1, 2) = 1.0;
    ops.push_back(norm * w);
  }
  HamiltonianSpec ladder({0.0, gap, 2.0 * gap});
  return KrausChannel(std::move(ops), ladder, ladder);
}

// ------------------------- qubit extremal channel -------------------------

KrausChannel qubit_extremal_symmetric_channel(double p, double q, double gap) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw domain_error(
        "qubit_extremal_symmetric_channel: populations must lie strictly in (0, 1)");
  }
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw domain_error("qubit_extremal_symmetric_channel: gap must be positive");
  }
  const double alpha = std::min(q / p, (1.0 - q) / (1.0 - p));
  std::vector<Matrix> ops;
  Matrix keep = Matrix::Zero(2, 2);
  if (q >= p) {
    keep(0, 0) = 1.0;
    keep(1, 1) = std::sqrt(alpha);
    ops.push_back(keep);
    if (alpha < 1.0) {
      Matrix decay = Matrix::Zero(2, 2);
      decay(0, 1) = std::sqrt(1.0 - alpha);
      ops.push_back(decay);
    }
  } else {
    keep(0, 0) = std::sqrt(alpha);
    keep(1, 1) = 1.0;
    ops.push_back(keep);
    Matrix excite = Matrix::Zero(2, 2);
    excite(1, 0) = std::sqrt(1.0 - alpha);
    ops.push_back(excite);
  }
  HamiltonianSpec ladder({0.0, gap});
  return KrausChannel(std::move(ops), ladder, ladder);
}

}  // namespace modeflow::channels
