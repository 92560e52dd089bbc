#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CLI_BINARY
#error "CLI_BINARY must point at the command-line executable"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("pdo subcommand emits the expected matrix") {
  const RunResult r = run_cli("pdo --psi V --phi D --mode incoherent --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "incoherent");
  CHECK(j["entries"][0][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["entries"][1][0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["lambda_minus"][0] == doctest::Approx(0.5 - std::sqrt(0.5)).epsilon(1e-9));
  CHECK(j["hermitian"] == true);
}

TEST_CASE("pdo pretty format stays human readable") {
  const RunResult r = run_cli("pdo --psi V --phi D --mode coherent --format pretty");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("lambda") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("pdo --psi V").exit_code == 2);            // missing required option
  CHECK(run_cli("pdo --psi V --phi nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                       // no subcommand
  CHECK(run_cli("pdo --psi V --phi H").exit_code == 3);    // orthogonal selection
  CHECK(run_cli("thermal --e0 1 --e1 0 --beta1 1 --beta2 1").exit_code == 2);
  CHECK(run_cli("simulate --layout coupled --theta 0.5 --n 2 --seed 1").exit_code == 5);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sweep CSV") {
  const RunResult r = run_cli("sweep --theta-min 0 --theta-max 1.0 --steps 5 --phase 0");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "theta,phase,p_up,lambda_minus_incoherent,lambda_minus_coherent");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 5);

  // first row: theta = 0, incoherent eigenvalue 0, coherent 1/2 - 1/sqrt2
  std::istringstream again(r.out);
  std::getline(again, header);
  std::string first;
  std::getline(again, first);
  double theta, phase, p_up, li, lc;
  char c;
  std::istringstream fields(first);
  fields >> theta >> c >> phase >> c >> p_up >> c >> li >> c >> lc;
  CHECK(theta == doctest::Approx(0.0));
  CHECK(li == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lc == doctest::Approx(0.5 - std::sqrt(0.5)).epsilon(1e-9));
}

TEST_CASE("sweep writes a file and fails cleanly on a bad path") {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/causal_sweep_test.csv";
  const RunResult ok =
      run_cli("sweep --theta-min 0 --theta-max 0.5 --steps 3 --out " + path);
  CHECK(ok.exit_code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "theta,phase,p_up,lambda_minus_incoherent,lambda_minus_coherent");
  std::remove(path.c_str());

  CHECK(run_cli("sweep --theta-min 0 --theta-max 0.5 --steps 3 --out /nonexistent/x.csv")
            .exit_code == 4);
}

TEST_CASE("three-time marginal check is exact") {
  const RunResult r = run_cli("three-time --a V --b D --order mixed");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["marginal_check"].get<double>() < 1e-12);
  CHECK(j["matrix"]["rows"] == 8);
}

TEST_CASE("thermal subcommand reproduces the worked example") {
  const RunResult r = run_cli("thermal --e0 0 --e1 1 --beta1 2 --beta2 3");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["beta_incoherent"].get<double>() == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(j["beta_coherent"][0].get<double>() == doctest::Approx(2.3995).epsilon(1e-3));
  CHECK(j["beta_coherent"][1].get<double>() == doctest::Approx(3.14159265).epsilon(1e-8));
}

TEST_CASE("simulate output is byte-identical across reruns and thread caps") {
  const std::string args = "simulate --layout coupled --theta 0.5236 --n 20000 --seed 9";
  const RunResult a = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(run_cli(args).out == a.out);

  setenv("CAUSAL_WITNESS_THREADS", "1", 1);
  const RunResult serial = run_cli(args);
  unsetenv("CAUSAL_WITNESS_THREADS");
  CHECK(serial.out == a.out);

  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["n_emitted"] == 20000);
  CHECK(j["seed"] == 9);
  CHECK(j["n_detected"].get<std::uint64_t>() < 20000);
}

TEST_CASE("simulate ideal mode detects every photon") {
  const RunResult r = run_cli("simulate --layout coupled --theta 0.5 --n 9000 --seed 2 --ideal");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n_detected"] == 9000);
}
