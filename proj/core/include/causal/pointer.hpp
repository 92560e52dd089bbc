#ifndef CAUSAL_POINTER_HPP
#define CAUSAL_POINTER_HPP

#include "causal/two_state.hpp"

namespace causal {

/// Gaussian von Neumann pointer: coupling g shifts the packet, delta is the
/// position spread of |G|^2.
struct PointerModel {
  double g;
  double delta;

  PointerModel(double g, double delta);

  bool weak_regime() const { return g <= 0.1 * delta; }
};

/// Post-selected pointer state after weakly measuring one Pauli observable:
/// psi_f(x) = a_plus G(x-g) + a_minus G(x+g) with a_pm = <phi|Pi_pm|psi>.
/// All moments are closed-form Gaussian integrals.
struct PointerDistribution {
  cplx a_plus, a_minus;
  double g, delta;

  double sigma_p() const { return 0.5 / delta; }
  double gaussian_overlap() const;  // exp(-g^2 / (2 delta^2))

  double success_probability() const;
  double mean_position() const;
  double second_moment_position() const;
  double mean_momentum() const;
  double second_moment_momentum() const;

  cplx amplitude_position(double x) const;
  cplx amplitude_momentum(double p) const;
};

PointerDistribution pointer_distribution(const TwoState& ts, int pauli_index,
                                         const PointerModel& pm);

/// First-order momentum response per unit Im(sigma_w), measured by a
/// central-difference fit of the exact mean momentum at small coupling.
/// Nothing analytic is assumed about the coefficient.
double momentum_response_coefficient(const PointerModel& pm);

}  // namespace causal

#endif
