#include <doctest.h>

#include <cmath>

#include "modeflow/channels.hpp"
#include "modeflow/qstate.hpp"

using namespace modeflow;
using namespace modeflow::channels;
using qstate::DensityMatrix;
using qstate::HamiltonianSpec;
using qstate::InverseTemperature;

namespace {

const HamiltonianSpec kQubit({0.0, 1.0});

KrausChannel identity_channel() {
  return KrausChannel({Matrix::Identity(2, 2)}, kQubit, kQubit);
}

KrausChannel damping_channel(double gamma) {
  Matrix keep = Matrix::Zero(2, 2);
  keep(0, 0) = 1.0;
  keep(1, 1) = std::sqrt(1.0 - gamma);
  Matrix decay = Matrix::Zero(2, 2);
  decay(0, 1) = std::sqrt(gamma);
  return KrausChannel({keep, decay}, kQubit, kQubit);
}

// geometric partition sum of `terms` powers of x
double partial_sum(double x, int terms) {
  return (1.0 - std::pow(x, terms)) / (1.0 - x);
}

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("kraus channel enforces completeness and shapes") {
  CHECK_THROWS_AS(KrausChannel({}, kQubit, kQubit), domain_error);
  CHECK_THROWS_AS(KrausChannel({Matrix::Identity(2, 2) * 0.5}, kQubit, kQubit),
                  domain_error);
  CHECK_THROWS_AS(KrausChannel({Matrix::Identity(3, 3)}, kQubit, kQubit), domain_error);
  CHECK(KrausChannel::completeness_violation({Matrix::Identity(2, 2)}) == 0.0);
  CHECK(KrausChannel::completeness_violation({Matrix::Identity(2, 2) * 0.5}) > 0.1);
  const KrausChannel id = identity_channel();
  CHECK(id.is_square());
  CHECK(id.input_dim() == 2);
}

TEST_CASE("apply acts by conjugation and revalidates the state") {
  Matrix rho(2, 2);
  rho << 0.5, 0.4, 0.4, 0.5;
  const DensityMatrix in(rho);
  const DensityMatrix out = apply(damping_channel(0.36), in);
  CHECK(std::abs(out.entry(0, 0).real() - (0.5 + 0.36 * 0.5)) < 1e-15);
  CHECK(std::abs(out.entry(0, 1).real() - 0.4 * 0.8) < 1e-15);

  Matrix wrong = Matrix::Identity(3, 3) / 3.0;
  CHECK_THROWS_AS(apply_matrix(damping_channel(0.5), wrong), domain_error);
}

TEST_CASE("induced stochastic matrix collects transition probabilities") {
  const StochasticMatrix p = induced_stochastic(damping_channel(0.36));
  CHECK(std::abs(p.prob(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(p.prob(0, 1) - 0.36) < 1e-15);
  CHECK(std::abs(p.prob(1, 1) - 0.64) < 1e-15);
  CHECK(p.prob(1, 0) == 0.0);
}

TEST_CASE("stochastic matrix validation") {
  Eigen::MatrixXd bad(2, 2);
  bad << 0.5, 0.5, 0.6, 0.5;
  CHECK_THROWS_AS((StochasticMatrix(bad)), domain_error);
  bad << 1.2, 0.0, -0.2, 1.0;
  CHECK_THROWS_AS((StochasticMatrix(bad)), domain_error);
}

TEST_CASE("covariance check separates phase-covariant from mixing maps") {
  CHECK(check_symmetric(damping_channel(0.5)).symmetric);
  CHECK(check_symmetric(identity_channel()).symmetric);

  Matrix hadamard(2, 2);
  hadamard << 1.0, 1.0, 1.0, -1.0;
  hadamard /= std::sqrt(2.0);
  const SymmetryCheck mixed = check_symmetric(KrausChannel({hadamard}, kQubit, kQubit));
  CHECK_FALSE(mixed.symmetric);
  CHECK(mixed.violation > 0.1);
}

TEST_CASE("gibbs fixed-point check") {
  // full decay holds the ground state fixed only at zero temperature
  const KrausChannel reset = damping_channel(1.0);
  CHECK(check_gibbs_preserving(reset, InverseTemperature::infinity()).preserving);
  CHECK_FALSE(check_gibbs_preserving(reset, InverseTemperature(1.0)).preserving);
}

TEST_CASE("classify reports raw operator lists without throwing") {
  const std::vector<Matrix> incomplete{Matrix::Identity(2, 2) * 0.5};
  const ChannelClassReport report =
      classify(incomplete, kQubit, kQubit, {InverseTemperature(1.0)});
  CHECK_FALSE(report.trace_preserving);
  CHECK(report.completeness_violation > 0.1);
  CHECK(report.gibbs.size() == 1);
  CHECK(report.gibbs[0].first == 1.0);

  const HamiltonianSpec triple({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(classify({Matrix::Zero(3, 2)}, kQubit, triple, {InverseTemperature(1.0)}),
                  domain_error);
}

TEST_CASE("convex combination mixes the induced transition matrices") {
  const KrausChannel mix = convex_combine(identity_channel(), damping_channel(1.0), 0.3);
  const StochasticMatrix p = induced_stochastic(mix);
  CHECK(std::abs(p.prob(0, 1) - 0.7) < 1e-15);
  CHECK(std::abs(p.prob(1, 1) - 0.3) < 1e-15);
  CHECK_THROWS_AS(convex_combine(identity_channel(), identity_channel(), 1.5),
                  domain_error);
}

TEST_CASE("composition multiplies actions") {
  const KrausChannel twice = compose(damping_channel(0.5), damping_channel(0.5));
  const StochasticMatrix p = induced_stochastic(twice);
  CHECK(std::abs(p.prob(1, 1) - 0.25) < 1e-15);

  const HamiltonianSpec triple({0.0, 1.0, 2.0});
  Matrix iso = Matrix::Zero(3, 2);
  iso(0, 0) = 1.0;
  iso(1, 1) = 1.0;
  const KrausChannel widen = KrausChannel({iso}, kQubit, triple);
  CHECK_THROWS_AS(compose(damping_channel(0.5), widen), domain_error);
  CHECK_NOTHROW(compose(widen, damping_channel(0.5)));
}

TEST_CASE("shift channel moves the upper-gap coherence down at the bath rate") {
  const int levels = 30;
  const double beta = 0.5;
  const double x = std::exp(-beta);
  const double ratio = partial_sum(x, levels - 2) / partial_sum(x, levels);

  const KrausChannel down =
      shift_channel(ShiftDirection::down, InverseTemperature(beta), 1.0, levels);
  Matrix rho = Matrix::Identity(3, 3) / 3.0;
  rho(2, 1) = 0.25;
  rho(1, 2) = 0.25;
  const DensityMatrix out = apply(down, DensityMatrix(rho));
  CHECK(std::abs(out.entry(1, 0).real() - 0.25 * ratio) < 1e-12);
  // all that survives at the source is the top bath level's weight
  const double top_weight = std::pow(x, levels - 1) * (1.0 - x) /
                            (1.0 - std::pow(x, levels));
  CHECK(std::abs(std::abs(out.entry(2, 1)) - 0.25 * top_weight) < 1e-12);

  const StochasticMatrix p = induced_stochastic(down);
  CHECK(std::abs(p.prob(1, 2) - ratio) < 1e-12);
  CHECK(std::abs(p.prob(0, 1) - partial_sum(x, levels - 1) / partial_sum(x, levels)) <
        1e-12);
  CHECK(std::abs(p.prob(2, 0) - x * x * ratio) < 1e-12);

  CHECK_THROWS_AS(shift_channel(ShiftDirection::down, InverseTemperature(beta), 1.0, 2),
                  domain_error);
  CHECK_THROWS_AS(shift_channel(ShiftDirection::down, InverseTemperature(beta), -1.0, 30),
                  domain_error);
}

TEST_CASE("shift channel moves the lower-gap coherence up at the thermal rate") {
  const int levels = 30;
  const double beta = 0.5;
  const double x = std::exp(-beta);
  const double ratio = partial_sum(x, levels - 2) / partial_sum(x, levels);

  const KrausChannel up =
      shift_channel(ShiftDirection::up, InverseTemperature(beta), 1.0, levels);
  Matrix rho = Matrix::Identity(3, 3) / 3.0;
  rho(1, 0) = 0.25;
  rho(0, 1) = 0.25;
  const DensityMatrix out = apply(up, DensityMatrix(rho));
  CHECK(std::abs(out.entry(2, 1).real() - 0.25 * x * ratio) < 1e-12);
}

TEST_CASE("shift channel is covariant and exactly thermal at any bath size") {
  // the bath is prepared in its own thermal state and the joint map conserves
  // energy, so truncation costs transfer quality, never the fixed point
  const InverseTemperature beta(0.5);
  for (int levels : {4, 30, 60}) {
    const KrausChannel ch = shift_channel(ShiftDirection::down, beta, 1.0, levels);
    CHECK(check_symmetric(ch).symmetric);
    const GibbsCheck gibbs = check_gibbs_preserving(ch, beta);
    CHECK(gibbs.preserving);
    CHECK(gibbs.violation <= tol::gibbs_preserving);
  }
}

TEST_CASE("merge channel combines same-mode coherences linearly") {
  const double mixing = 0.8;
  const double keep = 0.6;  // sqrt(1 - 0.64)
  const KrausChannel merge = merge_channel(mixing);
  CHECK(check_symmetric(merge).symmetric);

  // linear action on a traceless Hermitian probe: the merged entry is exactly
  // keep * a + mixing * b
  Matrix probe = Matrix::Zero(3, 3);
  probe(1, 0) = 0.3;
  probe(0, 1) = 0.3;
  probe(2, 1) = 0.4;
  probe(1, 2) = 0.4;
  const Matrix moved = apply_matrix(merge, probe);
  CHECK(std::abs(moved(1, 0) - Complex(keep * 0.3 + mixing * 0.4, 0.0)) < 1e-15);
  CHECK(std::abs(moved(2, 1)) < 1e-15);

  // on a physical state the same arithmetic saturates sqrt(a^2 + b^2)
  Matrix rho = Matrix::Identity(3, 3) / 3.0;
  rho(1, 0) = 0.15;
  rho(0, 1) = 0.15;
  rho(2, 1) = 0.2;
  rho(1, 2) = 0.2;
  const DensityMatrix out = apply(merge, DensityMatrix(rho));
  CHECK(std::abs(out.entry(1, 0).real() - 0.25) < 1e-15);

  const StochasticMatrix p = induced_stochastic(merge);
  CHECK(std::abs(p.prob(0, 1) - mixing * mixing) < 1e-15);
  CHECK(std::abs(p.prob(1, 1) - keep * keep) < 1e-15);
  CHECK(std::abs(p.prob(1, 2) - 1.0) < 1e-15);

  CHECK_THROWS_AS(merge_channel(1.5), domain_error);
  CHECK_THROWS_AS(merge_channel(-0.1), domain_error);
}

TEST_CASE("qubit extremal channel reaches the target population at maximal coherence") {
  Matrix rho(2, 2);
  rho << 0.5, 0.4, 0.4, 0.5;
  const DensityMatrix in(rho);

  SUBCASE("raising the ground population") {
    const KrausChannel ch = qubit_extremal_symmetric_channel(0.5, 0.75);
    const DensityMatrix out = apply(ch, in);
    CHECK(std::abs(out.entry(0, 0).real() - 0.75) < 1e-15);
    CHECK(std::abs(out.entry(0, 1).real() - 0.4 * std::sqrt(0.5)) < 1e-15);
    CHECK(check_symmetric(ch).symmetric);
  }
  SUBCASE("lowering the ground population") {
    const KrausChannel ch = qubit_extremal_symmetric_channel(0.75, 0.5);
    Matrix start(2, 2);
    start << 0.75, 0.3, 0.3, 0.25;
    const DensityMatrix out = apply(ch, DensityMatrix(start));
    CHECK(std::abs(out.entry(0, 0).real() - 0.5) < 1e-15);
    CHECK(std::abs(out.entry(0, 1).real() - 0.3 * std::sqrt(2.0 / 3.0)) < 1e-15);
  }
  SUBCASE("identity when q equals p") {
    const KrausChannel ch = qubit_extremal_symmetric_channel(0.5, 0.5);
    const DensityMatrix out = apply(ch, in);
    CHECK(std::abs(out.entry(0, 1).real() - 0.4) < 1e-15);
  }
  CHECK_THROWS_AS(qubit_extremal_symmetric_channel(0.0, 0.5), domain_error);
  CHECK_THROWS_AS(qubit_extremal_symmetric_channel(0.5, 1.0), domain_error);
}

}  // TEST_SUITE
