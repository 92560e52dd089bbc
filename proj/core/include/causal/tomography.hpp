#ifndef CAUSAL_TOMOGRAPHY_HPP
#define CAUSAL_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>

#include "causal/pdo.hpp"
#include "causal/pointer.hpp"

namespace causal {

enum class LayoutKind { coupled_polarizers, doubled_path, fixed_order };

/// One of the photonic setups: mechanically coupled polarizers, the doubled
/// path with uniformly chosen measurement segment, or a fixed causal order.
struct ExperimentLayout {
  LayoutKind kind;
  PolarizerConfig config;
  double p_up;  // order weight; the doubled path is 1/2 by construction

  ExperimentLayout(LayoutKind kind, PolarizerConfig config, double p_up = 0.5);
};

struct PauliEstimate {
  double re = 0.0, im = 0.0;
  double se_re = 0.0, se_im = 0.0;
  std::uint64_t n_detected = 0;
  bool se_defined = false;  // needs at least two samples
};

struct TomographyEstimate {
  std::uint64_t n_emitted = 0;
  std::uint64_t n_detected = 0;
  std::array<PauliEstimate, 3> pauli_means;  // x, y, z
  PseudoState reconstructed;
  double lambda_minus = 0.0;
  double lambda_minus_se = 0.0;
  bool lambda_se_defined = false;
  std::uint64_t seed = 0;
};

/// Finite-ensemble weak-measurement tomography. Deterministic in
/// (layout, pm, n, seed); photon streams are keyed by photon index, so the
/// result is bit-identical for any worker count (CAUSAL_WITNESS_THREADS caps
/// parallelism without affecting values).
TomographyEstimate run_tomography(const ExperimentLayout& layout, const PointerModel& pm,
                                  std::uint64_t n, std::uint64_t seed);

/// Ideal-measurement tomography: ABL-sampled Pauli outcomes, converging to
/// build_r_ideal.
TomographyEstimate run_ideal_tomography(const TwoState& ts, std::uint64_t n,
                                        std::uint64_t seed);

}  // namespace causal

#endif
