#include <doctest.h>

#include <cmath>
#include <numbers>

#include "causal/errors.hpp"
#include "causal/pdo.hpp"
#include "test_util.hpp"

using namespace causal;
using causal::testutil::random_ket;
using causal::testutil::random_two_state;

namespace {

const double pi = std::numbers::pi;
const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

CMatrix eq8_matrix(double theta, double phase) {
  const double t = std::tan(theta);
  return CMatrix{{1.0, 0.5 * std::polar(t, -phase)}, {0.5 * std::polar(t, phase), 0.0}};
}

CMatrix eq11_matrix(double theta, double phase) {
  const double t = std::tan(theta);
  return CMatrix{{0.5 + inv_sqrt2, inv_sqrt2 * std::polar(t, -phase)},
                 {inv_sqrt2 * std::polar(t, phase), 0.5 - inv_sqrt2}};
}

}  // namespace

TEST_CASE("fixed-order builder") {
  // |V><phi| / cos(theta) expanded by hand for a bloch post-selection
  const double theta = 0.6, phase = 1.1;
  const TwoState ts = polarizer_two_state(PolarizerConfig(theta, phase));
  const PseudoState up = build_gamma_fixed(ts, Direction::up);
  CHECK(std::abs(up.matrix(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(up.matrix(0, 1) - std::polar(std::tan(theta), -phase)) < 1e-14);
  CHECK(std::abs(up.matrix(1, 0)) < 1e-14);
  CHECK(std::abs(up.matrix(1, 1)) < 1e-14);
  CHECK(up.mode == PdoMode::fixed_up);
  CHECK(up.p_up == 1.0);
  CHECK_FALSE(up.hermitian);

  const TwoState trivial(ket_V(), ket_V());
  const PseudoState proj = build_gamma_fixed(trivial, Direction::up);
  CHECK(proj.matrix.max_abs_diff(CMatrix{{1.0, 0.0}, {0.0, 0.0}}) < 1e-15);

  CHECK_THROWS_AS(build_gamma_fixed(TwoState(ket_V(), ket_H()), Direction::up),
                  UndefinedWeakValueError);
}

TEST_CASE("Gamma_down is the Hermitian conjugate of Gamma_up") {
  RandomStream rs(31, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const TwoState ts = random_two_state(rs);
    const PseudoState up = build_gamma_fixed(ts, Direction::up);
    const PseudoState down = build_gamma_fixed(ts, Direction::down);
    CHECK(down.matrix.max_abs_diff(up.matrix.dagger()) < 1e-14);
  }
}

TEST_CASE("fixed-order spectrum is exactly {1, 0}") {
  RandomStream rs(32, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const TwoState ts = random_two_state(rs);
    for (Direction d : {Direction::up, Direction::down}) {
      const auto eig = build_gamma_fixed(ts, d).eigen;
      CHECK(std::abs(eig.values[0] - 1.0) < 1e-12);
      CHECK(std::abs(eig.values[1]) < 1e-12);
    }
  }
}

TEST_CASE("incoherent mixture reproduces the polarizer matrix") {
  RandomStream rs(33, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const double theta = rs.uniform() * 1.4, phase = rs.uniform() * 2 * pi * 0.999;
    const TwoState ts = polarizer_two_state(PolarizerConfig(theta, phase));
    const PseudoState inc = build_gamma_incoherent(ts, 0.5);
    CHECK(inc.matrix.max_abs_diff(eq8_matrix(theta, phase)) < 1e-12);
    CHECK(inc.hermitian);
  }

  // eigenvalues {1/2 +- sec(pi/4)/2}
  const PseudoState at45 = build_gamma_incoherent(polarizer_two_state(PolarizerConfig(pi / 4, 0.0)));
  CHECK(at45.eigen.real_values[0] == doctest::Approx(1.2071067812).epsilon(1e-9));
  CHECK(at45.eigen.real_values[1] == doctest::Approx(-0.2071067812).epsilon(1e-9));

  // degenerate mixture weight
  const TwoState ts = polarizer_two_state(PolarizerConfig(0.7, 0.3));
  CHECK(build_gamma_incoherent(ts, 1.0).matrix.max_abs_diff(
            build_gamma_fixed(ts, Direction::up).matrix) < 1e-14);
  CHECK_THROWS_AS(build_gamma_incoherent(ts, 1.5), std::invalid_argument);
}

TEST_CASE("coherent superposition reproduces the polarizer matrix") {
  RandomStream rs(34, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const double theta = rs.uniform() * 1.4, phase = rs.uniform() * 2 * pi * 0.999;
    const TwoState ts = polarizer_two_state(PolarizerConfig(theta, phase));
    CHECK(build_gamma_coherent(ts, 0.5).matrix.max_abs_diff(eq11_matrix(theta, phase)) < 1e-12);
  }

  // theta = 0: eigenvalues {1/2 +- 1/sqrt2}, negative even at unit overlap
  const PseudoState at0 = build_gamma_coherent(polarizer_two_state(PolarizerConfig(0.0, 0.0)));
  CHECK(at0.eigen.real_values[0] == doctest::Approx(0.5 + inv_sqrt2).epsilon(1e-12));
  CHECK(at0.eigen.real_values[1] == doctest::Approx(0.5 - inv_sqrt2).epsilon(1e-12));

  const TwoState ts = polarizer_two_state(PolarizerConfig(0.7, 0.3));
  CHECK(build_gamma_coherent(ts, 1.0).matrix.max_abs_diff(
            build_gamma_fixed(ts, Direction::up).matrix) < 1e-14);
}

TEST_CASE("every builder yields trace one across order weights") {
  RandomStream rs(35, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const TwoState ts = random_two_state(rs);
    for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
      CHECK(std::abs(build_gamma_incoherent(ts, p).matrix.trace() - 1.0) < 1e-12);
      CHECK(std::abs(build_gamma_coherent(ts, p).matrix.trace() - 1.0) < 1e-12);
    }
    CHECK(std::abs(build_r_ideal(ts).matrix.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("hermiticity flags by regime") {
  RandomStream rs(36, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const TwoState ts = random_two_state(rs);
    CHECK(build_gamma_incoherent(ts, 0.5).hermitian);
    CHECK(build_gamma_coherent(ts, 0.5).hermitian);
    CHECK(build_r_ideal(ts).hermitian);
    const PseudoState skew = build_gamma_incoherent(ts, 0.8);
    CHECK(skew.hermitian == skew.matrix.is_hermitian());
  }
}

TEST_CASE("purity identity at balanced weights") {
  RandomStream rs(37, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const TwoState ts = random_two_state(rs);
    const PseudoState inc = build_gamma_incoherent(ts, 0.5);
    const double purity = (inc.matrix * inc.matrix).trace().real();
    const double ov2 = std::norm(ts.overlap());
    CHECK(purity == doctest::Approx(0.5 * (1.0 + 1.0 / ov2)).epsilon(1e-12));
    CHECK(purity == doctest::Approx(1.0 - 2.0 * inc.matrix.determinant().real()).epsilon(1e-12));
  }
}

TEST_CASE("negativity boundary at unit overlap") {
  const PseudoState unit = build_gamma_incoherent(polarizer_two_state(PolarizerConfig(0.0, 0.0)));
  CHECK(std::abs(unit.lambda_minus()) < 1e-12);

  RandomStream rs(38, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const TwoState ts = random_two_state(rs, 0.05);
    const double ov = std::abs(ts.overlap());
    const double lm = build_gamma_incoherent(ts, 0.5).lambda_minus().real();
    if (ov < 1.0 - 1e-8) CHECK(lm < 0.0);
  }
}

TEST_CASE("generalized two-state") {
  // psi = phi collapses to the projector
  RandomStream rs(39, 0);
  const QubitKet k = random_ket(rs);
  const PseudoState same = build_generalized_two_state(k, k);
  CHECK(same.matrix.max_abs_diff(outer(k.amp, k.amp)) < 1e-13);

  // real overlap reduces to the balanced incoherent mixture
  for (int rep = 0; rep < 20; ++rep) {
    const double theta = 0.1 + 1.3 * rs.uniform();
    const QubitKet psi = ket_V();
    const QubitKet phi = parse_state_spec("bloch:" + std::to_string(theta) + ",0");
    const PseudoState gen = build_generalized_two_state(psi, phi);
    const PseudoState inc = build_gamma_incoherent(TwoState(psi, phi), 0.5);
    CHECK(gen.matrix.max_abs_diff(inc.matrix) < 1e-12);
  }

  CHECK_THROWS_AS(build_generalized_two_state(ket_V(), ket_H()), DegenerateSelectionError);
  // purely imaginary overlap also kills the symmetrized denominator
  CHECK_THROWS_AS(build_generalized_two_state(ket_V(), QubitKet(cplx(0.0, inv_sqrt2), inv_sqrt2)),
                  DegenerateSelectionError);
}

TEST_CASE("generalized two-state equals the ancilla route") {
  RandomStream rs(40, 0);
  int done = 0;
  while (done < 100) {
    const QubitKet psi = random_ket(rs), phi = random_ket(rs);
    if (std::abs(inner(phi, psi).real()) < 0.05) continue;
    ++done;
    const PseudoState direct = build_generalized_two_state(psi, phi);
    CHECK(direct.matrix.max_abs_diff(generalized_two_state_via_ancilla(psi, phi)) < 1e-12);
  }
}

TEST_CASE("generalized weak-value law") {
  RandomStream rs(41, 0);
  int done = 0;
  while (done < 50) {
    const QubitKet psi = random_ket(rs), phi = random_ket(rs);
    const cplx ov = inner(phi, psi);
    if (std::abs(ov.real()) < 0.05) continue;
    ++done;
    const cplx x_up = ov / (ov + std::conj(ov));
    const CMatrix obs = causal::testutil::random_hermitian(rs, 2);
    const PseudoState gen = build_generalized_two_state(psi, phi);
    // tr(Gamma C) traces the weak value against the generalized state
    const cplx cw = (gen.matrix * obs).trace();
    const cplx up_w = weak_value(TwoState(psi, phi), obs);
    CHECK(std::abs(cw - 2.0 * std::real(x_up * up_w)) < 1e-12);
  }
}

TEST_CASE("ideal-measurement pseudo-state") {
  // closed form for psi = |0>, phi = bloch:theta,phase
  RandomStream rs(42, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const double theta = 0.05 + 1.4 * rs.uniform(), phase = rs.uniform() * 6.0;
    const TwoState ts(ket_V(), QubitKet(std::cos(theta), std::polar(std::sin(theta), phase)));
    const PseudoState r = build_r_ideal(ts);
    const double s2t = std::sin(2 * theta);
    CHECK(std::abs(r.matrix(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(r.matrix(1, 1)) < 1e-12);
    CHECK(std::abs(r.matrix(0, 1) - 0.5 * std::polar(s2t, -phase)) < 1e-12);
    const double det = r.matrix.determinant().real();
    CHECK(det == doctest::Approx(-std::pow(std::cos(theta) * std::sin(theta), 2)).epsilon(1e-10));
    // time symmetry
    CHECK(build_r_ideal(ts.swapped()).matrix.max_abs_diff(r.matrix) < 1e-12);
  }

  const PseudoState trivial = build_r_ideal(TwoState(ket_V(), ket_V()));
  CHECK(trivial.matrix.max_abs_diff(CMatrix{{1.0, 0.0}, {0.0, 0.0}}) < 1e-14);
}

TEST_CASE("R reduces to the incoherent Gamma on distinct-axis eigenvectors") {
  const std::array<QubitKet, 6> eigvecs{ket_D(), ket_A(), ket_R(), ket_L(), ket_V(), ket_H()};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 6; ++k) {
      if (i / 2 == k / 2) continue;
      const TwoState ts(eigvecs[i], eigvecs[k]);
      CHECK(build_r_ideal(ts).matrix.max_abs_diff(
                build_gamma_incoherent(ts, 0.5).matrix) < 1e-12);
    }
}

TEST_CASE("three-time PDO marginals") {
  RandomStream rs(43, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const TwoState ts = random_two_state(rs, 0.1);
    const MultiTimePdo pdo = build_three_time_pdo(ts.pre(), ts.post());
    CHECK(pdo.matrix.is_hermitian(1e-10));
    CHECK(std::abs(pdo.matrix.trace() - 1.0) < 1e-10);
    const CMatrix rt = build_r_ideal(ts).matrix;
    CHECK(pdo.marginal('C').max_abs_diff(rt) < 1e-12);
  }
}

TEST_CASE("forward and reversed orders share only the C marginal") {
  const QubitKet a = ket_V(), b = ket_D();
  const MultiTimePdo fwd = build_three_time_pdo(a, b, CausalOrder::forward);
  const MultiTimePdo rev = build_three_time_pdo(a, b, CausalOrder::reversed);
  CHECK(fwd.matrix.max_abs_diff(rev.matrix) > 1e-3);
  CHECK(fwd.marginal('C').max_abs_diff(rev.marginal('C')) < 1e-12);

  const MultiTimePdo mixed = build_three_time_pdo(a, b, CausalOrder::mixed);
  CHECK(mixed.matrix.max_abs_diff(0.5 * (fwd.matrix + rev.matrix)) < 1e-14);
  CHECK(mixed.marginal('C').max_abs_diff(fwd.marginal('C')) < 1e-12);
}

TEST_CASE("three-time PDO with equal selections") {
  const MultiTimePdo pdo = build_three_time_pdo(ket_V(), ket_V());
  CHECK(pdo.marginal('C').max_abs_diff(CMatrix{{1.0, 0.0}, {0.0, 0.0}}) < 1e-12);
}

TEST_CASE("three-time PDO rejects orthogonal selections") {
  CHECK_THROWS_AS(build_three_time_pdo(ket_V(), ket_H()), DegenerateSelectionError);
}

TEST_CASE("witness comparison") {
  // theta = pi/3: sec = 2, lambda_inc = -1/2, lambda_coh = 1/2 - sqrt2
  const WitnessReport at60 = witness_compare(polarizer_two_state(PolarizerConfig(pi / 3, 0.0)));
  CHECK(at60.lambda_minus_incoherent.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(at60.lambda_minus_coherent.real() == doctest::Approx(0.5 - std::numbers::sqrt2).epsilon(1e-12));
  CHECK(at60.coherent_strictly_below);
  CHECK(at60.verdict == Verdict::incoherent_compatible);

  const WitnessReport at0 = witness_compare(polarizer_two_state(PolarizerConfig(0.0, 0.0)));
  CHECK(std::abs(at0.lambda_minus_incoherent) < 1e-12);
  CHECK(at0.lambda_minus_coherent.real() == doctest::Approx(0.5 - inv_sqrt2).epsilon(1e-12));
  CHECK(at0.verdict == Verdict::coherent_compatible);

  const WitnessReport fixed = witness_compare(polarizer_two_state(PolarizerConfig(0.4, 0.0)), 1.0);
  CHECK(std::abs(fixed.lambda_minus_incoherent) < 1e-12);
  CHECK(std::abs(fixed.lambda_minus_coherent) < 1e-12);
  CHECK(fixed.verdict == Verdict::no_negativity);
}

TEST_CASE("strict discrimination on a theta grid") {
  for (int i = 0; i < 1000; ++i) {
    const double theta = 1.45 * i / 999.0;
    const WitnessReport r = witness_compare(polarizer_two_state(PolarizerConfig(theta, 0.0)));
    const double gap = r.lambda_minus_coherent.real() - r.lambda_minus_incoherent.real();
    CHECK(gap == doctest::Approx((0.5 - inv_sqrt2) / std::cos(theta)).epsilon(1e-10));
    CHECK(gap < 0.0);
  }
}
