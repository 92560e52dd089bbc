// Command-line front end: pseudo-state builders, the Fig.-2-style parameter
// sweep, the three-time PDO, the thermal betas, and the Monte Carlo
// tomography simulator.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "causal/errors.hpp"
#include "causal/json_io.hpp"
#include "causal/sweep.hpp"

namespace {

using namespace causal;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;
constexpr int kExitStatistics = 5;

std::string fmt10(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << v;
  return os.str();
}

void print_pretty(const PseudoState& ps) {
  std::cout << "mode: " << to_string(ps.mode) << "  p_up: " << ps.p_up << "\n";
  std::cout << "matrix:\n";
  for (std::size_t r = 0; r < 2; ++r) {
    std::cout << "  [";
    for (std::size_t c = 0; c < 2; ++c) {
      const cplx e = ps.matrix(r, c);
      std::cout << (c ? ", " : " ") << e.real() << (e.imag() < 0 ? " - " : " + ")
                << std::abs(e.imag()) << "i";
    }
    std::cout << " ]\n";
  }
  std::cout << "trace: " << ps.matrix.trace().real() << "\n";
  std::cout << "hermitian: " << (ps.hermitian ? "yes" : "no") << "\n";
  std::cout << "eigenvalues:";
  for (const auto& v : ps.eigen.values) std::cout << " (" << v.real() << ", " << v.imag() << ")";
  std::cout << "\nlambda_minus: (" << ps.lambda_minus().real() << ", "
            << ps.lambda_minus().imag() << ")\n";
}

int cmd_pdo(const std::string& psi_spec, const std::string& phi_spec, const std::string& mode,
            double p_up, const std::string& format) {
  const QubitKet psi = parse_state_spec(psi_spec);
  const QubitKet phi = parse_state_spec(phi_spec);
  const TwoState ts(psi, phi);

  std::optional<PseudoState> ps;
  if (mode == "up") ps = build_gamma_fixed(ts, Direction::up);
  else if (mode == "down") ps = build_gamma_fixed(ts, Direction::down);
  else if (mode == "incoherent") ps = build_gamma_incoherent(ts, p_up);
  else if (mode == "coherent") ps = build_gamma_coherent(ts, p_up);
  else if (mode == "generalized") ps = build_generalized_two_state(psi, phi);
  else if (mode == "ideal") ps = build_r_ideal(ts);
  else throw CLI::ValidationError("--mode", "unknown mode '" + mode + "'");

  if (format == "json")
    std::cout << pseudo_state_to_json(*ps).dump(2) << "\n";
  else
    print_pretty(*ps);
  return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_path) {
  std::ostringstream csv;
  csv << "theta,phase,p_up,lambda_minus_incoherent,lambda_minus_coherent\n";
  for (const SweepRow& row : sweep_rows(cfg))
    csv << fmt10(row.theta) << ',' << fmt10(row.phase) << ',' << fmt10(row.p_up) << ','
        << fmt10(row.lambda_minus_incoherent) << ',' << fmt10(row.lambda_minus_coherent) << "\n";

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path);
    f << csv.str();
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitIo;
    }
  }
  return 0;
}

int cmd_three_time(const std::string& a_spec, const std::string& b_spec,
                   const std::string& order_name) {
  const QubitKet a = parse_state_spec(a_spec);
  const QubitKet b = parse_state_spec(b_spec);
  CausalOrder order = CausalOrder::forward;
  if (order_name == "reversed") order = CausalOrder::reversed;
  else if (order_name == "mixed") order = CausalOrder::mixed;
  else if (order_name != "forward")
    throw CLI::ValidationError("--order", "unknown order '" + order_name + "'");

  const MultiTimePdo pdo = build_three_time_pdo(a, b, order);
  const CMatrix r_t = build_r_ideal(TwoState(a, b)).matrix;
  const CMatrix marginal_c = pdo.marginal('C');

  json j{{"order", order_name},
         {"matrix", matrix_to_json(pdo.matrix)},
         {"marginals",
          {{"A", matrix_to_json(pdo.marginal('A'))},
           {"C", matrix_to_json(marginal_c)},
           {"B", matrix_to_json(pdo.marginal('B'))}}},
         {"marginal_check", marginal_c.max_abs_diff(r_t)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_thermal(double e0, double e1, double beta1, double beta2) {
  const GibbsSpec spec(e0, e1, beta1, beta2);
  std::cout << thermal_to_json(spec).dump(2) << "\n";
  return 0;
}

int cmd_simulate(const std::string& layout_name, double theta, double phase, double p_up,
                 std::uint64_t n, std::uint64_t seed, double g, double delta, bool ideal) {
  const PolarizerConfig cfg(theta, phase);
  if (ideal) {
    const TomographyEstimate est = run_ideal_tomography(polarizer_two_state(cfg), n, seed);
    std::cout << estimate_to_json(est).dump(2) << "\n";
    return 0;
  }

  LayoutKind kind;
  if (layout_name == "coupled") kind = LayoutKind::coupled_polarizers;
  else if (layout_name == "doubled") kind = LayoutKind::doubled_path;
  else if (layout_name == "fixed") kind = LayoutKind::fixed_order;
  else throw CLI::ValidationError("--layout", "unknown layout '" + layout_name + "'");

  const PointerModel pm(g, delta);
  if (!pm.weak_regime())
    std::cerr << "warning: g/delta = " << g / delta
              << " is outside the weak regime, the first-order estimator is biased\n";
  const TomographyEstimate est = run_tomography(ExperimentLayout(kind, cfg, p_up), pm, n, seed);
  std::cout << estimate_to_json(est).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-time pseudo-density operators of pre- and post-selected qubits"};
  app.require_subcommand(1);

  // pdo
  std::string psi_spec, phi_spec, mode = "incoherent", format = "pretty";
  double p_up = 0.5;
  auto* pdo_cmd = app.add_subcommand("pdo", "Build one pseudo-state");
  pdo_cmd->add_option("--psi", psi_spec, "Pre-selected state spec")->required();
  pdo_cmd->add_option("--phi", phi_spec, "Post-selected state spec")->required();
  pdo_cmd->add_option("--mode", mode, "up|down|incoherent|coherent|generalized|ideal");
  pdo_cmd->add_option("--p-up", p_up, "Causal order weight");
  pdo_cmd->add_option("--format", format, "json|pretty");

  // sweep
  double theta_min = 0.0, theta_max = 1.45, phase = 0.0;
  std::size_t steps = 146;
  double sweep_p_up = 0.5;
  std::size_t p_up_steps = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Witness eigenvalues over a theta grid (CSV)");
  sweep_cmd->add_option("--theta-min", theta_min, "Grid start");
  sweep_cmd->add_option("--theta-max", theta_max, "Grid end (< pi/2)");
  sweep_cmd->add_option("--steps", steps, "Grid points (>= 2)");
  sweep_cmd->add_option("--phase", phase, "Azimuthal angle of the post-selection");
  sweep_cmd->add_option("--p-up", sweep_p_up, "Causal order weight");
  sweep_cmd->add_option("--p-up-steps", p_up_steps,
                        "If set, sweep p_up over [0,1] on this many points instead");
  sweep_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");

  // three-time
  std::string a_spec, b_spec, order_name = "forward";
  auto* three_cmd = app.add_subcommand("three-time", "Three-time PDO and its marginals");
  three_cmd->add_option("--a", a_spec, "Pre-selected state spec")->required();
  three_cmd->add_option("--b", b_spec, "Post-selected state spec")->required();
  three_cmd->add_option("--order", order_name, "forward|reversed|mixed");

  // thermal
  double e0 = 0.0, e1 = 1.0, beta1 = 0.0, beta2 = 0.0;
  auto* thermal_cmd = app.add_subcommand("thermal", "Effective inverse temperatures");
  thermal_cmd->add_option("--e0", e0, "Ground energy")->required();
  thermal_cmd->add_option("--e1", e1, "Excited energy")->required();
  thermal_cmd->add_option("--beta1", beta1, "Pre-selection inverse temperature")->required();
  thermal_cmd->add_option("--beta2", beta2, "Post-selection inverse temperature")->required();

  // simulate
  std::string layout_name = "coupled";
  double sim_theta = std::numbers::pi / 6, sim_phase = 0.0, sim_p_up = 0.5;
  std::uint64_t n = 1000000, seed = 0;
  double g = 0.01, delta = 1.0;
  bool ideal = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo tomography of the photonic setups");
  sim_cmd->add_option("--layout", layout_name, "coupled|doubled|fixed");
  sim_cmd->add_option("--theta", sim_theta, "Polarizer angle");
  sim_cmd->add_option("--phase", sim_phase, "Polarizer phase");
  sim_cmd->add_option("--p-up", sim_p_up, "Causal order weight (coupled layout)");
  sim_cmd->add_option("--n", n, "Emitted photons");
  sim_cmd->add_option("--seed", seed, "RNG seed");
  sim_cmd->add_option("--g", g, "Pointer coupling");
  sim_cmd->add_option("--delta", delta, "Pointer spread");
  sim_cmd->add_flag("--ideal", ideal, "Ideal-measurement (ABL) tomography");

  try {
    app.parse(argc, argv);

    if (pdo_cmd->parsed()) return cmd_pdo(psi_spec, phi_spec, mode, p_up, format);
    if (sweep_cmd->parsed()) {
      std::vector<double> p_ups{sweep_p_up};
      if (p_up_steps >= 2) {
        p_ups.clear();
        for (std::size_t i = 0; i < p_up_steps; ++i)
          p_ups.push_back(static_cast<double>(i) / static_cast<double>(p_up_steps - 1));
      }
      return cmd_sweep(SweepConfig(theta_min, theta_max, steps, phase, p_ups), out_path);
    }
    if (three_cmd->parsed()) return cmd_three_time(a_spec, b_spec, order_name);
    if (thermal_cmd->parsed()) return cmd_thermal(e0, e1, beta1, beta2);
    if (sim_cmd->parsed())
      return cmd_simulate(layout_name, sim_theta, sim_phase, sim_p_up, n, seed, g, delta, ideal);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const causal::SelectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const causal::InsufficientStatisticsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStatistics;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
