#include "causal/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "causal/errors.hpp"
#include "causal/philox.hpp"

namespace causal {

namespace {

constexpr std::size_t kShards = 64;

struct ObsAccumulator {
  std::uint64_t n = 0;
  double sum_x = 0.0, sum_x2 = 0.0;
  double sum_p = 0.0, sum_p2 = 0.0;

  void merge(const ObsAccumulator& o) {
    n += o.n;
    sum_x += o.sum_x;
    sum_x2 += o.sum_x2;
    sum_p += o.sum_p;
    sum_p2 += o.sum_p2;
  }
};

using ShardAcc = std::array<ObsAccumulator, 3>;

std::size_t worker_count() {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CAUSAL_WITNESS_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) hw = std::min(hw, static_cast<std::size_t>(cap));
  }
  return std::min(hw, kShards);
}

// Run `body(shard, photon)` over [0, n) split into kShards fixed shards.
// Shard partials are reduced in shard order, so the totals do not depend on
// the worker count.
template <typename Body>
std::vector<ShardAcc> run_sharded(std::uint64_t n, Body body) {
  std::vector<ShardAcc> partials(kShards);
  const std::size_t workers = worker_count();
  auto work = [&](std::size_t tid) {
    for (std::size_t s = tid; s < kShards; s += workers) {
      const std::uint64_t lo = n * s / kShards, hi = n * (s + 1) / kShards;
      for (std::uint64_t idx = lo; idx < hi; ++idx) body(partials[s], idx);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return partials;
}

double sample_position(const PointerDistribution& d, RandomStream& rs) {
  const double wp = 2.0 * std::norm(d.a_plus), wm = 2.0 * std::norm(d.a_minus);
  const double inv_two_d2 = 1.0 / (2.0 * d.delta * d.delta);
  while (true) {
    const double center = rs.uniform() * (wp + wm) <= wp ? d.g : -d.g;
    const double x = center + d.delta * rs.normal();
    const double dp = x - d.g, dm = x + d.g;
    const double envelope = wp * std::exp(-dp * dp * inv_two_d2) + wm * std::exp(-dm * dm * inv_two_d2);
    const double target =
        std::norm(d.a_plus * std::exp(-dp * dp * inv_two_d2 * 0.5) +
                  d.a_minus * std::exp(-dm * dm * inv_two_d2 * 0.5));
    if (rs.uniform() * envelope <= target) return x;
  }
}

double sample_momentum(const PointerDistribution& d, RandomStream& rs) {
  const double bound = std::norm(std::abs(d.a_plus) + std::abs(d.a_minus));
  const double sp = d.sigma_p();
  while (true) {
    const double p = sp * rs.normal();
    const double target =
        std::norm(d.a_plus * std::polar(1.0, -p * d.g) + d.a_minus * std::polar(1.0, p * d.g));
    if (rs.uniform() * bound <= target) return p;
  }
}

PauliEstimate finalize(const ObsAccumulator& acc, double scale_x, double scale_p) {
  PauliEstimate e;
  e.n_detected = acc.n;
  if (acc.n == 0) return e;
  const double n = static_cast<double>(acc.n);
  const double mx = acc.sum_x / n, mp = acc.sum_p / n;
  e.re = mx / scale_x;
  e.im = mp / scale_p;
  if (acc.n >= 2) {
    const double vx = std::max(0.0, (acc.sum_x2 - n * mx * mx) / (n - 1.0));
    const double vp = std::max(0.0, (acc.sum_p2 - n * mp * mp) / (n - 1.0));
    e.se_re = std::sqrt(vx / n) / std::abs(scale_x);
    e.se_im = std::sqrt(vp / n) / std::abs(scale_p);
    e.se_defined = true;
  } else {
    e.se_re = e.se_im = std::numeric_limits<double>::quiet_NaN();
  }
  return e;
}

// Witness eigenvalue and a first-order error bar propagated through the real
// Pauli weights of the reconstruction.
void attach_lambda(TomographyEstimate& est) {
  est.lambda_minus = est.reconstructed.lambda_minus().real();
  double norm2 = 0.0;
  for (const auto& p : est.pauli_means) norm2 += p.re * p.re;
  const double norm = std::sqrt(norm2);
  bool defined = norm > 0.0;
  double var = 0.0;
  for (const auto& p : est.pauli_means) {
    if (!p.se_defined) defined = false;
    if (norm > 0.0) var += (p.re / (2.0 * norm)) * (p.re / (2.0 * norm)) * p.se_re * p.se_re;
  }
  est.lambda_minus_se = defined ? std::sqrt(var) : std::numeric_limits<double>::quiet_NaN();
  est.lambda_se_defined = defined;
}

PseudoState reconstruct(const std::array<PauliEstimate, 3>& pauli_means, PdoMode mode,
                        double p_up) {
  std::array<cplx, 4> c{1.0, 0.0, 0.0, 0.0};
  for (int j = 0; j < 3; ++j) c[j + 1] = cplx(pauli_means[j].re, pauli_means[j].im);
  return make_pseudo_state(0.5 * pauli_assemble(c), mode, p_up);
}

}  // namespace

ExperimentLayout::ExperimentLayout(LayoutKind kind_, PolarizerConfig config_, double p_up_)
    : kind(kind_), config(config_), p_up(p_up_) {
  if (!(p_up >= 0.0 && p_up <= 1.0))
    throw std::invalid_argument("ExperimentLayout: p_up must lie in [0, 1]");
}

TomographyEstimate run_tomography(const ExperimentLayout& layout, const PointerModel& pm,
                                  std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("run_tomography: need at least one photon");
  if (!(pm.g > 0.0)) throw std::invalid_argument("run_tomography: estimator needs g > 0");

  const TwoState up_ts = polarizer_two_state(layout.config);
  const TwoState down_ts = up_ts.swapped();
  std::array<PointerDistribution, 6> dists = {
      pointer_distribution(up_ts, 1, pm),   pointer_distribution(up_ts, 2, pm),
      pointer_distribution(up_ts, 3, pm),   pointer_distribution(down_ts, 1, pm),
      pointer_distribution(down_ts, 2, pm), pointer_distribution(down_ts, 3, pm)};

  // Full-chain detection probability, including the 1/2 chance that an
  // unpolarized photon passes the first polarizer. The doubled path adds the
  // second pair of polarizers.
  const double overlap2 = std::norm(up_ts.overlap());
  auto detect_prob = [&](const PointerDistribution& d) {
    double p = 0.5 * d.success_probability();
    if (layout.kind == LayoutKind::doubled_path) p *= overlap2;
    return p;
  };

  auto partials = run_sharded(n, [&](ShardAcc& acc, std::uint64_t idx) {
    RandomStream rs(seed, idx);
    const int obs = static_cast<int>(idx % 3);  // round-robin x, y, z

    bool up = true;
    switch (layout.kind) {
      case LayoutKind::coupled_polarizers: up = rs.uniform() <= layout.p_up; break;
      case LayoutKind::doubled_path: up = rs.uniform() <= 0.5; break;  // segment choice
      case LayoutKind::fixed_order: break;
    }
    const PointerDistribution& d = dists[(up ? 0 : 3) + obs];
    if (rs.uniform() > detect_prob(d)) return;  // absorbed before the detector

    ObsAccumulator& a = acc[obs];
    const double x = sample_position(d, rs);
    const double p = sample_momentum(d, rs);
    a.n += 1;
    a.sum_x += x;
    a.sum_x2 += x * x;
    a.sum_p += p;
    a.sum_p2 += p * p;
  });

  std::array<ObsAccumulator, 3> total;
  for (const auto& shard : partials)
    for (int j = 0; j < 3; ++j) total[j].merge(shard[j]);

  std::uint64_t detected = total[0].n + total[1].n + total[2].n;
  if (total[0].n == 0 || total[1].n == 0 || total[2].n == 0)
    throw InsufficientStatisticsError("run_tomography: an observable has zero detected photons");

  const double c_p = momentum_response_coefficient(pm);
  TomographyEstimate est{n, detected, {}, reconstruct({}, PdoMode::incoherent, 0.5), 0.0,
                         0.0, false, seed};
  for (int j = 0; j < 3; ++j) est.pauli_means[j] = finalize(total[j], pm.g, c_p * pm.g);

  const PdoMode mode = layout.kind == LayoutKind::fixed_order ? PdoMode::fixed_up
                                                              : PdoMode::incoherent;
  const double p_up = layout.kind == LayoutKind::fixed_order   ? 1.0
                      : layout.kind == LayoutKind::doubled_path ? 0.5
                                                                : layout.p_up;
  est.reconstructed = reconstruct(est.pauli_means, mode, p_up);
  attach_lambda(est);
  return est;
}

TomographyEstimate run_ideal_tomography(const TwoState& ts, std::uint64_t n,
                                        std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("run_ideal_tomography: need at least one photon");

  // Outcome probabilities are the ABL conditionals, so every shot counts.
  std::array<double, 3> p_plus;
  for (int j = 0; j < 3; ++j) p_plus[j] = abl_probability(ts, pauli_eigenbasis(j + 1), 0);

  auto partials = run_sharded(n, [&](ShardAcc& acc, std::uint64_t idx) {
    RandomStream rs(seed, idx);
    const int obs = static_cast<int>(idx % 3);
    const double o = rs.uniform() <= p_plus[obs] ? 1.0 : -1.0;
    ObsAccumulator& a = acc[obs];
    a.n += 1;
    a.sum_x += o;
    a.sum_x2 += o * o;
  });

  std::array<ObsAccumulator, 3> total;
  for (const auto& shard : partials)
    for (int j = 0; j < 3; ++j) total[j].merge(shard[j]);

  TomographyEstimate est{n, n, {}, reconstruct({}, PdoMode::ideal_abl, 0.5), 0.0,
                         0.0, false, seed};
  for (int j = 0; j < 3; ++j) est.pauli_means[j] = finalize(total[j], 1.0, 1.0);
  est.reconstructed = reconstruct(est.pauli_means, PdoMode::ideal_abl, 0.5);
  attach_lambda(est);
  return est;
}

}  // namespace causal
