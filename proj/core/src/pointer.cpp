#include "causal/pointer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "causal/errors.hpp"

namespace causal {

PointerModel::PointerModel(double g_, double delta_) : g(g_), delta(delta_) {
  if (!(delta > 0.0)) throw std::invalid_argument("PointerModel: delta must be positive");
  if (!(g >= 0.0)) throw std::invalid_argument("PointerModel: g must be non-negative");
}

double PointerDistribution::gaussian_overlap() const {
  return std::exp(-g * g / (2.0 * delta * delta));
}

double PointerDistribution::success_probability() const {
  return std::norm(a_plus) + std::norm(a_minus) +
         2.0 * std::real(a_plus * std::conj(a_minus)) * gaussian_overlap();
}

double PointerDistribution::mean_position() const {
  return g * (std::norm(a_plus) - std::norm(a_minus)) / success_probability();
}

double PointerDistribution::second_moment_position() const {
  const double d2 = delta * delta;
  return ((std::norm(a_plus) + std::norm(a_minus)) * (d2 + g * g) +
          2.0 * std::real(a_plus * std::conj(a_minus)) * gaussian_overlap() * d2) /
         success_probability();
}

double PointerDistribution::mean_momentum() const {
  const double sp2 = sigma_p() * sigma_p();
  return 4.0 * g * sp2 * gaussian_overlap() * std::imag(a_plus * std::conj(a_minus)) /
         success_probability();
}

double PointerDistribution::second_moment_momentum() const {
  const double sp2 = sigma_p() * sigma_p();
  return sp2 *
         (std::norm(a_plus) + std::norm(a_minus) +
          2.0 * std::real(a_plus * std::conj(a_minus)) * gaussian_overlap() *
              (1.0 - 4.0 * g * g * sp2)) /
         success_probability();
}

cplx PointerDistribution::amplitude_position(double x) const {
  const double norm = std::pow(2.0 * std::numbers::pi * delta * delta, -0.25);
  auto packet = [&](double center) {
    const double d = x - center;
    return norm * std::exp(-d * d / (4.0 * delta * delta));
  };
  return a_plus * packet(g) + a_minus * packet(-g);
}

cplx PointerDistribution::amplitude_momentum(double p) const {
  const double norm = std::pow(2.0 * delta * delta / std::numbers::pi, 0.25);
  const double packet = norm * std::exp(-delta * delta * p * p);
  return (a_plus * std::polar(1.0, -p * g) + a_minus * std::polar(1.0, p * g)) * packet;
}

PointerDistribution pointer_distribution(const TwoState& ts, int pauli_index,
                                         const PointerModel& pm) {
  const QubitKet psi = ts.psi_eff(), phi = ts.phi_eff();
  if (std::abs(inner(phi, psi)) <= kZeroOverlapTol)
    throw UndefinedWeakValueError("pointer_distribution: zero overlap");
  auto amp = [&](int sign) {
    const CMatrix proj = pauli_projector(pauli_index, sign);
    cplx a = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        a += std::conj(phi.amp[i]) * proj(i, j) * psi.amp[j];
    return a;
  };
  return PointerDistribution{amp(+1), amp(-1), pm.g, pm.delta};
}

double momentum_response_coefficient(const PointerModel& pm) {
  // Reference pair (|V>, |D>) measured along sigma_y: Im(sigma_w) = 1 exactly.
  const TwoState ref(ket_V(), ket_D());
  const double h = 1e-6 * pm.delta;
  auto mean_at = [&](double g) {
    PointerDistribution d = pointer_distribution(ref, 2, PointerModel(std::abs(g), pm.delta));
    return g >= 0.0 ? d.mean_momentum() : -d.mean_momentum();
  };
  return (mean_at(h) - mean_at(-h)) / (2.0 * h);
}

}  // namespace causal
