#include "causal/two_state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "causal/errors.hpp"

namespace causal {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

QubitKet apply(const CMatrix& u, const QubitKet& k) {
  return QubitKet::normalized(u(0, 0) * k.amp[0] + u(0, 1) * k.amp[1],
                              u(1, 0) * k.amp[0] + u(1, 1) * k.amp[1]);
}

void check_unitary(const CMatrix& u, const char* name) {
  if (u.rows() != 2 || u.cols() != 2)
    throw std::invalid_argument(std::string(name) + ": must be 2x2");
  if ((u.dagger() * u).max_abs_diff(CMatrix::identity(2)) > 1e-10)
    throw std::invalid_argument(std::string(name) + ": not unitary");
}

}  // namespace

QubitKet::QubitKet(cplx v, cplx h) : amp{v, h} {
  if (std::abs(norm() - 1.0) > 1e-12)
    throw std::invalid_argument("QubitKet: not normalized");
}

QubitKet QubitKet::normalized(cplx v, cplx h) {
  const double n = std::sqrt(std::norm(v) + std::norm(h));
  if (n == 0.0) throw std::invalid_argument("QubitKet: zero vector");
  return QubitKet(v / n, h / n);
}

double QubitKet::norm() const {
  return std::sqrt(std::norm(amp[0]) + std::norm(amp[1]));
}

cplx inner(const QubitKet& a, const QubitKet& b) {
  return std::conj(a.amp[0]) * b.amp[0] + std::conj(a.amp[1]) * b.amp[1];
}

QubitKet ket_V() { return QubitKet(1.0, 0.0); }
QubitKet ket_H() { return QubitKet(0.0, 1.0); }
QubitKet ket_D() { return QubitKet(kInvSqrt2, kInvSqrt2); }
QubitKet ket_A() { return QubitKet(kInvSqrt2, -kInvSqrt2); }
QubitKet ket_R() { return QubitKet(kInvSqrt2, cplx(0.0, kInvSqrt2)); }
QubitKet ket_L() { return QubitKet(kInvSqrt2, cplx(0.0, -kInvSqrt2)); }

QubitKet parse_state_spec(const std::string& spec) {
  if (spec == "V") return ket_V();
  if (spec == "H") return ket_H();
  if (spec == "D") return ket_D();
  if (spec == "A") return ket_A();
  if (spec == "R") return ket_R();
  if (spec == "L") return ket_L();

  auto parse_numbers = [&](const std::string& body, std::size_t count) {
    std::vector<double> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("state spec: bad number '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("state spec: bad number '" + tok + "'");
      out.push_back(v);
    }
    if (out.size() != count)
      throw std::invalid_argument("state spec: expected " + std::to_string(count) + " numbers");
    return out;
  };

  if (spec.rfind("bloch:", 0) == 0) {
    const auto v = parse_numbers(spec.substr(6), 2);
    return QubitKet::normalized(std::cos(v[0]), std::polar(std::sin(v[0]), v[1]));
  }
  if (spec.rfind("amp:", 0) == 0) {
    const auto v = parse_numbers(spec.substr(4), 4);
    return QubitKet::normalized(cplx(v[0], v[1]), cplx(v[2], v[3]));
  }
  throw std::invalid_argument("unrecognized state spec '" + spec + "'");
}

TwoState::TwoState(QubitKet pre, QubitKet post, std::optional<CMatrix> u_pre,
                   std::optional<CMatrix> u_post)
    : pre_(pre), post_(post), u_pre_(std::move(u_pre)), u_post_(std::move(u_post)) {
  if (u_pre_) check_unitary(*u_pre_, "u_pre");
  if (u_post_) check_unitary(*u_post_, "u_post");
}

QubitKet TwoState::psi_eff() const { return u_pre_ ? apply(*u_pre_, pre_) : pre_; }

QubitKet TwoState::phi_eff() const {
  return u_post_ ? apply(u_post_->dagger(), post_) : post_;
}

cplx TwoState::overlap() const { return inner(phi_eff(), psi_eff()); }

bool TwoState::zero_overlap() const { return std::abs(overlap()) <= kZeroOverlapTol; }

TwoState TwoState::swapped() const {
  std::optional<CMatrix> up, upost;
  if (u_post_) up = u_post_->dagger();
  if (u_pre_) upost = u_pre_->dagger();
  return TwoState(post_, pre_, std::move(up), std::move(upost));
}

PolarizerConfig::PolarizerConfig(double theta_, double phase_) : theta(theta_), phase(phase_) {
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2))
    throw std::invalid_argument("PolarizerConfig: theta must lie in [0, pi/2)");
  if (!(phase >= 0.0 && phase < 2 * std::numbers::pi))
    throw std::invalid_argument("PolarizerConfig: phase must lie in [0, 2pi)");
}

TwoState polarizer_two_state(const PolarizerConfig& cfg) {
  const QubitKet post(std::cos(cfg.theta), std::polar(std::sin(cfg.theta), cfg.phase));
  return TwoState(ket_V(), post);
}

cplx weak_value(const TwoState& ts, const CMatrix& obs) {
  if (obs.rows() != 2 || obs.cols() != 2)
    throw std::invalid_argument("weak_value: observable must be 2x2");
  const QubitKet psi = ts.psi_eff(), phi = ts.phi_eff();
  const cplx ov = inner(phi, psi);
  if (std::abs(ov) <= kZeroOverlapTol)
    throw UndefinedWeakValueError("weak_value: zero overlap between pre and post selection");
  cplx num = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      num += std::conj(phi.amp[i]) * obs(i, j) * psi.amp[j];
  return num / ov;
}

CMatrix pauli_projector(int j, int sign) {
  if (j < 1 || j > 3) throw std::invalid_argument("pauli_projector: index must be 1..3");
  if (sign != 1 && sign != -1) throw std::invalid_argument("pauli_projector: sign must be +-1");
  return 0.5 * (CMatrix::identity(2) + static_cast<double>(sign) * pauli(j));
}

cplx projector_weak_value(const TwoState& ts, int j, int sign) {
  return weak_value(ts, pauli_projector(j, sign));
}

double abl_probability(const TwoState& ts, const std::vector<QubitKet>& outcomes,
                       std::size_t index) {
  if (index >= outcomes.size()) throw std::invalid_argument("abl_probability: index out of range");
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (std::size_t k = i + 1; k < outcomes.size(); ++k)
      if (std::abs(inner(outcomes[i], outcomes[k])) > 1e-10)
        throw std::invalid_argument("abl_probability: outcomes not orthonormal");

  const QubitKet psi = ts.psi_eff(), phi = ts.phi_eff();
  double denom = 0.0, num = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const double p = std::norm(inner(phi, outcomes[i]) * inner(outcomes[i], psi));
    denom += p;
    if (i == index) num = p;
  }
  if (denom <= kZeroOverlapTol * kZeroOverlapTol)
    throw DegenerateSelectionError("abl_probability: every path amplitude vanishes");
  return num / denom;
}

std::vector<QubitKet> pauli_eigenbasis(int j) {
  switch (j) {
    case 1: return {ket_D(), ket_A()};
    case 2: return {ket_R(), ket_L()};
    case 3: return {ket_V(), ket_H()};
    default: throw std::invalid_argument("pauli_eigenbasis: index must be 1..3");
  }
}

double abl_expectation(const TwoState& ts, int j) {
  const auto basis = pauli_eigenbasis(j);
  const double p_plus = abl_probability(ts, basis, 0);
  return 2.0 * p_plus - 1.0;
}

}  // namespace causal
