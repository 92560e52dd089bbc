#ifndef CAUSAL_SWEEP_HPP
#define CAUSAL_SWEEP_HPP

#include <vector>

#include "causal/pdo.hpp"

namespace causal {

/// Uniform theta grid (and optionally a p_up grid) for the witness comparison.
struct SweepConfig {
  double theta_min, theta_max;
  std::size_t theta_steps;
  double phase = 0.0;
  std::vector<double> p_up_values{0.5};

  SweepConfig(double theta_min, double theta_max, std::size_t theta_steps,
              double phase = 0.0, std::vector<double> p_up_values = {0.5});
};

struct SweepRow {
  double theta, phase, p_up;
  double lambda_minus_incoherent;  // real part of the witness branch
  double lambda_minus_coherent;
};

std::vector<SweepRow> sweep_rows(const SweepConfig& cfg);

}  // namespace causal

#endif
