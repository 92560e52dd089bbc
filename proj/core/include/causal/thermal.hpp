#ifndef CAUSAL_THERMAL_HPP
#define CAUSAL_THERMAL_HPP

#include <string>
#include <utility>

#include "causal/pdo.hpp"

namespace causal {

/// Two-level Hamiltonian plus the inverse temperatures of the Gibbs pre-
/// and post-selections.
struct GibbsSpec {
  double e0, e1;      // energies, e1 > e0
  double beta1, beta2;

  GibbsSpec(double e0, double e1, double beta1, double beta2);

  double gap() const { return e1 - e0; }
};

/// Normalized Boltzmann populations (p0, p1) of selection 1 or 2.
std::pair<double, double> gibbs_populations(const GibbsSpec& spec, int which);

enum class ThermalMode { fixed, incoherent, coherent };

/// Gibbs-selected pseudo-state. Fixed and incoherent modes give the Gibbs
/// diagonal at inverse temperature (beta1+beta2)/2; the coherent mode is the
/// diagonal (1/2 - 1/sqrt2) I + sqrt2 Gamma_up, generally with one negative
/// entry. The purifying environment is taken identical and non-evolving for
/// both selections.
PseudoState build_thermal_gamma(const GibbsSpec& spec, ThermalMode mode);

struct EffectiveTemperature {
  cplx beta_eff;
  std::string branch_note;  // logarithm branch used
};

/// beta = ln(lambda_0/lambda_1)/(e1-e0), principal branch. Real for two
/// positive populations; Im = pi/(e1-e0) exactly when one is negative.
EffectiveTemperature effective_beta(const PseudoState& state, const GibbsSpec& spec);

}  // namespace causal

#endif
