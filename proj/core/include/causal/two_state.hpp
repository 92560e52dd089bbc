#ifndef CAUSAL_TWO_STATE_HPP
#define CAUSAL_TWO_STATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "causal/cmatrix.hpp"

namespace causal {

// Overlap magnitude at or below this counts as a vanishing selection amplitude.
inline constexpr double kZeroOverlapTol = 1e-14;

/// Normalized 2-component ket, basis order |V> = |0> then |H> = |1>.
struct QubitKet {
  std::array<cplx, 2> amp;

  QubitKet(cplx v, cplx h);  // throws unless already normalized to 1e-12
  static QubitKet normalized(cplx v, cplx h);

  double norm() const;
};

cplx inner(const QubitKet& a, const QubitKet& b);  // <a|b>

// Named kets of the state-spec grammar.
QubitKet ket_V();
QubitKet ket_H();
QubitKet ket_D();  // (V+H)/sqrt2
QubitKet ket_A();  // (V-H)/sqrt2
QubitKet ket_R();  // (V+iH)/sqrt2, sigma_y eigenvector +1
QubitKet ket_L();  // (V-iH)/sqrt2

/// Parse the state-spec grammar: V | H | D | A | R | L |
/// bloch:<theta>,<phase> | amp:<reV>,<imV>,<reH>,<imH> (normalized on parse).
QubitKet parse_state_spec(const std::string& spec);

/// Pre-selected ket, post-selected ket (the ket of the backward bra), and
/// optional intermediate unitaries. Defaults leave the free evolution out.
class TwoState {
 public:
  TwoState(QubitKet pre, QubitKet post,
           std::optional<CMatrix> u_pre = std::nullopt,
           std::optional<CMatrix> u_post = std::nullopt);

  const QubitKet& pre() const { return pre_; }
  const QubitKet& post() const { return post_; }

  QubitKet psi_eff() const;  // u_pre applied to pre
  QubitKet phi_eff() const;  // u_post^dagger applied to post

  cplx overlap() const;  // <phi_eff|psi_eff>
  bool zero_overlap() const;

  /// Pre and post interchanged (unitary roles swap and conjugate with them).
  TwoState swapped() const;

 private:
  QubitKet pre_, post_;
  std::optional<CMatrix> u_pre_, u_post_;
};

/// Polarizer pair of the photonic setups: theta in [0, pi/2), phase in [0, 2pi).
struct PolarizerConfig {
  double theta;
  double phase;

  PolarizerConfig(double theta, double phase);
};

/// pre = |V>, post ket = cos(theta)|V> + e^{+i phase} sin(theta)|H>.
TwoState polarizer_two_state(const PolarizerConfig& cfg);

/// <phi|obs|psi>/<phi|psi>. Throws UndefinedWeakValueError on zero overlap.
cplx weak_value(const TwoState& ts, const CMatrix& obs);

/// Weak value of the Pauli eigenprojector Pi^{j,sign}.
cplx projector_weak_value(const TwoState& ts, int j, int sign);

CMatrix pauli_projector(int j, int sign);

/// ABL probability of outcome `index` for an ideal measurement over an
/// orthonormal basis of outcomes.
double abl_probability(const TwoState& ts, const std::vector<QubitKet>& outcomes,
                       std::size_t index);

/// p(sigma^j = +1) - p(sigma^j = -1) under the ABL rule.
double abl_expectation(const TwoState& ts, int j);

/// +1/-1 eigenvectors of sigma^j, j in 1..3.
std::vector<QubitKet> pauli_eigenbasis(int j);

}  // namespace causal

#endif
