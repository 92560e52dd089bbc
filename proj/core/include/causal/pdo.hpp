#ifndef CAUSAL_PDO_HPP
#define CAUSAL_PDO_HPP

#include <string>

#include "causal/cmatrix.hpp"
#include "causal/two_state.hpp"

namespace causal {

enum class PdoMode { fixed_up, fixed_down, incoherent, coherent, generalized, ideal_abl };

std::string to_string(PdoMode mode);

/// 2x2 pseudo-density operator tagged with how it was built.
struct PseudoState {
  CMatrix matrix;
  PdoMode mode;
  double p_up;
  bool hermitian;
  EigenResult eigen;

  /// Eigenvalue with the most negative real part (the witness branch).
  cplx lambda_minus() const { return eigen.values.back(); }
};

/// Tag, flag and eigendecompose a builder output (trace must be 1).
PseudoState make_pseudo_state(CMatrix matrix, PdoMode mode, double p_up);

enum class Direction { up, down };

/// Gamma_up = |psi><phi| / <phi|psi>, Gamma_down its Hermitian conjugate.
PseudoState build_gamma_fixed(const TwoState& ts, Direction dir);

/// p Gamma_up + (1-p) Gamma_down.
PseudoState build_gamma_incoherent(const TwoState& ts, double p_up = 0.5);

/// (1 - sqrt(p) - sqrt(1-p))/2 * I + sqrt(p) Gamma_up + sqrt(1-p) Gamma_down.
PseudoState build_gamma_coherent(const TwoState& ts, double p_up = 0.5);

/// (|psi><phi| + |phi><psi|) / (<phi|psi> + <psi|phi>).
PseudoState build_generalized_two_state(const QubitKet& psi, const QubitKet& phi);

/// Same state through the ancilla construction: assemble the entangled
/// selections on system (x) control, divide by their overlap, trace out the
/// control.
CMatrix generalized_two_state_via_ancilla(const QubitKet& psi, const QubitKet& phi);

/// Ideal-measurement pseudo-state (I + sum_j <sigma^j>_ABL sigma^j)/2.
PseudoState build_r_ideal(const TwoState& ts);

enum class CausalOrder { forward, reversed, mixed };

/// 8x8 pseudo-density operator over the three time slots A, C, B.
struct MultiTimePdo {
  CMatrix matrix;
  QubitKet a, b;
  CausalOrder order;

  static constexpr std::array<char, 3> slots{'A', 'C', 'B'};

  /// Single-slot marginal, e.g. slot 'C' for the intermediate time.
  CMatrix marginal(char slot) const;
};

/// Sequential-measurement three-time PDO. Pauli correlators come from
/// projective amplitude chains a -> A -> C -> B -> b conditioned on
/// post-selection; `reversed` runs the chain from b to a; `mixed` averages
/// the two orders.
MultiTimePdo build_three_time_pdo(const QubitKet& a, const QubitKet& b,
                                  CausalOrder order = CausalOrder::forward);

enum class Verdict { no_negativity, coherent_compatible, incoherent_compatible };

std::string to_string(Verdict v);

struct WitnessReport {
  cplx lambda_minus_incoherent;
  cplx lambda_minus_coherent;
  double magnitude_incoherent;
  double magnitude_coherent;
  bool coherent_strictly_below;  // Re(lam_coh) < Re(lam_inc)
  Verdict verdict;
};

/// Negative-eigenvalue comparison of the incoherent and coherent builds at
/// the same selection pair and order weight.
WitnessReport witness_compare(const TwoState& ts, double p_up = 0.5);

}  // namespace causal

#endif
