#include "causal/json_io.hpp"

#include <cmath>

namespace causal {

using nlohmann::json;

namespace {

json cplx_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(cplx_pair(e));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  CMatrix m(rows, cols);
  std::size_t k = 0;
  for (const auto& e : entries) {
    m(k / cols, k % cols) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    ++k;
  }
  return m;
}

json pseudo_state_to_json(const PseudoState& ps) {
  json j = matrix_to_json(ps.matrix);
  j["mode"] = to_string(ps.mode);
  j["p_up"] = ps.p_up;
  j["trace"] = cplx_pair(ps.matrix.trace());
  j["hermitian"] = ps.hermitian;
  json eig = json::array();
  for (const auto& v : ps.eigen.values) eig.push_back(cplx_pair(v));
  j["eigenvalues"] = std::move(eig);
  j["lambda_minus"] = cplx_pair(ps.lambda_minus());
  return j;
}

json estimate_to_json(const TomographyEstimate& est) {
  json means = json::array();
  for (const auto& p : est.pauli_means)
    means.push_back(json::array(
        {p.re, p.im, finite_or_null(p.se_re), finite_or_null(p.se_im)}));
  return json{{"n_emitted", est.n_emitted},
              {"n_detected", est.n_detected},
              {"pauli_means", std::move(means)},
              {"matrix", pseudo_state_to_json(est.reconstructed)},
              {"lambda_minus", json::array({est.lambda_minus, finite_or_null(est.lambda_minus_se)})},
              {"seed", est.seed}};
}

json thermal_to_json(const GibbsSpec& spec) {
  const PseudoState inc = build_thermal_gamma(spec, ThermalMode::incoherent);
  const PseudoState coh = build_thermal_gamma(spec, ThermalMode::coherent);
  const cplx beta_inc = effective_beta(inc, spec).beta_eff;
  const cplx beta_coh = effective_beta(coh, spec).beta_eff;
  return json{{"beta_incoherent", beta_inc.real()},
              {"beta_coherent", json::array({beta_coh.real(), beta_coh.imag()})},
              {"diag_incoherent", json::array({inc.matrix(0, 0).real(), inc.matrix(1, 1).real()})},
              {"diag_coherent", json::array({coh.matrix(0, 0).real(), coh.matrix(1, 1).real()})}};
}

}  // namespace causal
