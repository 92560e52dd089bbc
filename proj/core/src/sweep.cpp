#include "causal/sweep.hpp"

#include <numbers>
#include <stdexcept>

namespace causal {

SweepConfig::SweepConfig(double tmin, double tmax, std::size_t steps, double phase_,
                         std::vector<double> p_ups)
    : theta_min(tmin), theta_max(tmax), theta_steps(steps), phase(phase_),
      p_up_values(std::move(p_ups)) {
  if (!(theta_min < theta_max && theta_max < std::numbers::pi / 2))
    throw std::invalid_argument("SweepConfig: need theta_min < theta_max < pi/2");
  if (theta_steps < 2) throw std::invalid_argument("SweepConfig: need at least 2 steps");
  if (p_up_values.empty()) throw std::invalid_argument("SweepConfig: empty p_up list");
  for (double p : p_up_values)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("SweepConfig: p_up outside [0, 1]");
}

std::vector<SweepRow> sweep_rows(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(cfg.theta_steps * cfg.p_up_values.size());
  for (std::size_t i = 0; i < cfg.theta_steps; ++i) {
    const double theta =
        cfg.theta_min + (cfg.theta_max - cfg.theta_min) * static_cast<double>(i) /
                            static_cast<double>(cfg.theta_steps - 1);
    const TwoState ts = polarizer_two_state(PolarizerConfig(theta, cfg.phase));
    for (double p : cfg.p_up_values) {
      const WitnessReport report = witness_compare(ts, p);
      rows.push_back({theta, cfg.phase, p, report.lambda_minus_incoherent.real(),
                      report.lambda_minus_coherent.real()});
    }
  }
  return rows;
}

}  // namespace causal
