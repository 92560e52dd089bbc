#include "causal/thermal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "causal/errors.hpp"

namespace causal {

GibbsSpec::GibbsSpec(double e0_, double e1_, double beta1_, double beta2_)
    : e0(e0_), e1(e1_), beta1(beta1_), beta2(beta2_) {
  if (!(e1 > e0)) throw std::invalid_argument("GibbsSpec: requires e1 > e0");
  if (!std::isfinite(beta1) || !std::isfinite(beta2))
    throw std::invalid_argument("GibbsSpec: betas must be finite");
}

std::pair<double, double> gibbs_populations(const GibbsSpec& spec, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("gibbs_populations: which must be 1 or 2");
  const double beta = which == 1 ? spec.beta1 : spec.beta2;
  // Shift energies so the weights stay finite for any beta sign.
  const double w1 = std::exp(-beta * spec.gap());
  return {1.0 / (1.0 + w1), w1 / (1.0 + w1)};
}

PseudoState build_thermal_gamma(const GibbsSpec& spec, ThermalMode mode) {
  const auto [p01, p11] = gibbs_populations(spec, 1);
  const auto [p02, p12] = gibbs_populations(spec, 2);

  // Gamma_up with unit environment overlap: diagonal with entries
  // proportional to sqrt(p_{i|1} p_{i|2}), i.e. Gibbs at (beta1+beta2)/2.
  const double g0u = std::sqrt(p01 * p02), g1u = std::sqrt(p11 * p12);
  const double g0 = g0u / (g0u + g1u), g1 = g1u / (g0u + g1u);

  CMatrix m(2, 2);
  PdoMode tag = PdoMode::incoherent;
  switch (mode) {
    case ThermalMode::fixed:
      m(0, 0) = g0;
      m(1, 1) = g1;
      tag = PdoMode::fixed_up;
      break;
    case ThermalMode::incoherent:
      m(0, 0) = g0;
      m(1, 1) = g1;
      tag = PdoMode::incoherent;
      break;
    case ThermalMode::coherent: {
      const double off = 0.5 - 1.0 / std::numbers::sqrt2;
      m(0, 0) = off + std::numbers::sqrt2 * g0;
      m(1, 1) = off + std::numbers::sqrt2 * g1;
      tag = PdoMode::coherent;
      break;
    }
  }
  return make_pseudo_state(std::move(m), tag, mode == ThermalMode::fixed ? 1.0 : 0.5);
}

EffectiveTemperature effective_beta(const PseudoState& state, const GibbsSpec& spec) {
  const CMatrix& m = state.matrix;
  if (std::abs(m(0, 1)) > 1e-10 || std::abs(m(1, 0)) > 1e-10)
    throw std::invalid_argument("effective_beta: state is not diagonal in the energy basis");
  const cplx l0 = m(0, 0), l1 = m(1, 1);
  if (std::abs(l0) <= kZeroOverlapTol || std::abs(l1) <= kZeroOverlapTol)
    throw ThermalPoleError("effective_beta: zero population, beta diverges");
  cplx logratio;
  if (l0.imag() == 0.0 && l1.imag() == 0.0) {
    // Keep the negative-ratio branch at +i pi regardless of signed zeros.
    const double r = l0.real() / l1.real();
    logratio = r > 0.0 ? cplx(std::log(r), 0.0) : cplx(std::log(-r), std::numbers::pi);
  } else {
    logratio = std::log(l0 / l1);
  }
  return EffectiveTemperature{logratio / spec.gap(), "principal"};
}

}  // namespace causal
