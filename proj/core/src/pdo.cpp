#include "causal/pdo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "causal/errors.hpp"

namespace causal {

namespace {

void check_weight(double p_up) {
  if (!(p_up >= 0.0 && p_up <= 1.0))
    throw std::invalid_argument("p_up must lie in [0, 1]");
}

CMatrix gamma_up_matrix(const TwoState& ts) {
  const QubitKet psi = ts.psi_eff(), phi = ts.phi_eff();
  const cplx ov = inner(phi, psi);
  if (std::abs(ov) <= kZeroOverlapTol)
    throw UndefinedWeakValueError("pseudo-state undefined: zero overlap");
  return outer(psi.amp, phi.amp) * (1.0 / ov);
}

using Vec2 = std::array<cplx, 2>;

Vec2 apply2(const CMatrix& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

cplx dot_bra(const Vec2& bra_ket, const Vec2& v) {
  return std::conj(bra_ket[0]) * v[0] + std::conj(bra_ket[1]) * v[1];
}

// Outcome list of one time slot: identity slot has the single outcome +1.
struct SlotOutcome {
  double value;
  CMatrix projector;
};

std::vector<SlotOutcome> slot_outcomes(int pauli_index) {
  if (pauli_index == 0) return {{1.0, CMatrix::identity(2)}};
  return {{1.0, pauli_projector(pauli_index, +1)},
          {-1.0, pauli_projector(pauli_index, -1)}};
}

// c_ijk = sum over outcome chains of (alpha gamma beta) P(alpha,gamma,beta),
// P proportional to |<end| P3 P2 P1 |start>|^2 and normalized per triple.
double sequential_correlator(const Vec2& start, const Vec2& end, int i, int j, int k) {
  double num = 0.0, den = 0.0;
  for (const auto& o1 : slot_outcomes(i))
    for (const auto& o2 : slot_outcomes(j))
      for (const auto& o3 : slot_outcomes(k)) {
        const cplx amp = dot_bra(end, apply2(o3.projector, apply2(o2.projector, apply2(o1.projector, start))));
        const double p = std::norm(amp);
        den += p;
        num += o1.value * o2.value * o3.value * p;
      }
  if (den <= kZeroOverlapTol * kZeroOverlapTol)
    throw DegenerateSelectionError("three-time PDO: selection annihilates a Pauli triple");
  return num / den;
}

CMatrix three_time_matrix(const QubitKet& a, const QubitKet& b, bool reversed) {
  // Forward chain visits the slots as A, C, B between |a> and <b|. The
  // reversed causal order visits them as C, B, A with the selections
  // exchanged; a plain dagger of the forward chain would leave every
  // probability unchanged, which is not a different order.
  CMatrix m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const double c = reversed ? sequential_correlator(b.amp, a.amp, j, k, i)
                                  : sequential_correlator(a.amp, b.amp, i, j, k);
        if (c != 0.0) m = m + (c / 8.0) * tensor(pauli(i), pauli(j), pauli(k));
      }
  return m;
}

}  // namespace

std::string to_string(PdoMode mode) {
  switch (mode) {
    case PdoMode::fixed_up: return "fixed_up";
    case PdoMode::fixed_down: return "fixed_down";
    case PdoMode::incoherent: return "incoherent";
    case PdoMode::coherent: return "coherent";
    case PdoMode::generalized: return "generalized";
    case PdoMode::ideal_abl: return "ideal_abl";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no_negativity: return "no_negativity";
    case Verdict::coherent_compatible: return "coherent_compatible";
    case Verdict::incoherent_compatible: return "incoherent_compatible";
  }
  return "?";
}

PseudoState make_pseudo_state(CMatrix matrix, PdoMode mode, double p_up) {
  if (matrix.rows() != 2 || matrix.cols() != 2)
    throw std::invalid_argument("PseudoState: matrix must be 2x2");
  if (!matrix.is_finite()) throw std::invalid_argument("PseudoState: non-finite entries");
  const bool herm = matrix.is_hermitian();
  EigenResult eig = eig2(matrix);
  return PseudoState{std::move(matrix), mode, p_up, herm, std::move(eig)};
}

PseudoState build_gamma_fixed(const TwoState& ts, Direction dir) {
  CMatrix up = gamma_up_matrix(ts);

  // Same matrix through the weak-value template, as a construction check.
  std::array<cplx, 4> c{1.0, 0.0, 0.0, 0.0};
  for (int j = 1; j < 4; ++j) c[j] = weak_value(ts, pauli(j));
  if (up.max_abs_diff(0.5 * pauli_assemble(c)) > 1e-12)
    throw std::logic_error("build_gamma_fixed: template mismatch");

  if (dir == Direction::up) return make_pseudo_state(std::move(up), PdoMode::fixed_up, 1.0);
  return make_pseudo_state(up.dagger(), PdoMode::fixed_down, 0.0);
}

PseudoState build_gamma_incoherent(const TwoState& ts, double p_up) {
  check_weight(p_up);
  const CMatrix up = gamma_up_matrix(ts);
  return make_pseudo_state(p_up * up + (1.0 - p_up) * up.dagger(), PdoMode::incoherent, p_up);
}

PseudoState build_gamma_coherent(const TwoState& ts, double p_up) {
  check_weight(p_up);
  const double sp = std::sqrt(p_up), sq = std::sqrt(1.0 - p_up);
  const CMatrix up = gamma_up_matrix(ts);
  CMatrix m = 0.5 * (1.0 - sp - sq) * CMatrix::identity(2) + sp * up + sq * up.dagger();
  return make_pseudo_state(std::move(m), PdoMode::coherent, p_up);
}

PseudoState build_generalized_two_state(const QubitKet& psi, const QubitKet& phi) {
  const cplx sym = inner(phi, psi) + inner(psi, phi);  // 2 Re<phi|psi>
  if (std::abs(sym) <= kZeroOverlapTol)
    throw DegenerateSelectionError("generalized two-state: symmetrized overlap vanishes");
  CMatrix m = (outer(psi.amp, phi.amp) + outer(phi.amp, psi.amp)) * (1.0 / sym);
  return make_pseudo_state(std::move(m), PdoMode::generalized, 0.5);
}

CMatrix generalized_two_state_via_ancilla(const QubitKet& psi, const QubitKet& phi) {
  // System (x) control, control is the fast index.
  std::array<cplx, 4> big_psi{}, big_phi{};
  for (std::size_t s = 0; s < 2; ++s) {
    big_psi[2 * s] = psi.amp[s] / std::numbers::sqrt2;
    big_psi[2 * s + 1] = phi.amp[s] / std::numbers::sqrt2;
    big_phi[2 * s] = phi.amp[s] / std::numbers::sqrt2;
    big_phi[2 * s + 1] = psi.amp[s] / std::numbers::sqrt2;
  }
  cplx ov = 0.0;
  for (std::size_t i = 0; i < 4; ++i) ov += std::conj(big_phi[i]) * big_psi[i];
  if (std::abs(ov) <= kZeroOverlapTol)
    throw DegenerateSelectionError("generalized two-state: ancilla overlap vanishes");
  CMatrix joint(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) joint(i, j) = big_psi[i] * std::conj(big_phi[j]) / ov;
  const std::array<char, 2> labels{'s', 'c'};
  const std::array<char, 1> keep{'s'};
  return partial_trace(joint, labels, keep);
}

PseudoState build_r_ideal(const TwoState& ts) {
  std::array<cplx, 4> c{1.0, 0.0, 0.0, 0.0};
  for (int j = 1; j < 4; ++j) c[j] = abl_expectation(ts, j);
  return make_pseudo_state(0.5 * pauli_assemble(c), PdoMode::ideal_abl, 0.5);
}

CMatrix MultiTimePdo::marginal(char slot) const {
  const std::array<char, 1> keep{slot};
  return partial_trace(matrix, slots, keep);
}

MultiTimePdo build_three_time_pdo(const QubitKet& a, const QubitKet& b, CausalOrder order) {
  CMatrix m(8, 8);
  switch (order) {
    case CausalOrder::forward: m = three_time_matrix(a, b, false); break;
    case CausalOrder::reversed: m = three_time_matrix(a, b, true); break;
    case CausalOrder::mixed:
      m = 0.5 * (three_time_matrix(a, b, false) + three_time_matrix(a, b, true));
      break;
  }
  return MultiTimePdo{std::move(m), a, b, order};
}

WitnessReport witness_compare(const TwoState& ts, double p_up) {
  const PseudoState inc = build_gamma_incoherent(ts, p_up);
  const PseudoState coh = build_gamma_coherent(ts, p_up);
  const cplx li = inc.lambda_minus(), lc = coh.lambda_minus();

  constexpr double tol = 1e-12;
  Verdict verdict = Verdict::no_negativity;
  if (li.real() < -tol)
    verdict = Verdict::incoherent_compatible;
  else if (lc.real() < -tol)
    verdict = Verdict::coherent_compatible;

  return WitnessReport{li, lc, std::abs(li), std::abs(lc), lc.real() < li.real(), verdict};
}

}  // namespace causal
