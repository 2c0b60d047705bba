#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bhcv/circuit.hpp"
#include "bhcv/workflows.hpp"

using namespace bhcv;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

template <typename Cmd>
RunResult run(Cmd cmd, const RunConfig& config) {
  std::ostringstream out, err;
  const int code = cmd(config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lattice spec parsing") {
  CHECK(parse_lattice_spec("chain:4").num_sites == 4);
  CHECK(parse_lattice_spec("grid:3").num_sites == 9);
  CHECK_THROWS_AS(parse_lattice_spec("ring:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_spec("chain"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_spec("chain:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_spec("grid:0"), std::invalid_argument);
}

TEST_CASE("plan selection: steps xor epsilon") {
  RunConfig config;
  config.lattice = "chain:4";
  config.t = 1.0;
  config.epsilon = 0.01;
  CHECK(plan_from_config(config).params.K == 1600);

  config.steps = 4;
  CHECK_THROWS_AS(plan_from_config(config), std::invalid_argument);

  config.epsilon.reset();
  CHECK(plan_from_config(config).params.K == 4);

  config.steps.reset();
  CHECK(plan_from_config(config).params.K == 1);  // default single step
}

TEST_CASE("count command") {
  RunConfig config;
  config.lattice = "chain:4";
  config.V_dip = 0.0;
  config.t = 1.0;
  config.steps = 1;
  RunResult r = run(cmd_count, config);
  CHECK(r.code == 0);
  CHECK(r.out.find("(60, 8, 32, 8, 6)") != std::string::npos);

  // deterministic output
  RunResult r2 = run(cmd_count, config);
  CHECK(r2.out == r.out);

  config.lattice = "nope";
  CHECK(run(cmd_count, config).code == 2);
}

TEST_CASE("compile command writes a parseable document") {
  const std::string path = "compile_test_out.json";
  RunConfig config;
  config.lattice = "grid:1";
  config.t = 1.0;
  config.steps = 1;
  config.out_path = path;
  RunResult r = run(cmd_compile, config);
  CHECK(r.code == 0);
  CHECK(r.out.find("steps: K = 1") != std::string::npos);

  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  Circuit c = deserialize(buf.str());
  CHECK(c.num_modes == 1);
  CHECK(c.gates.size() == 24);  // one on-site block
  std::remove(path.c_str());

  // two steps double the gate list
  config.out_path.clear();
  config.lattice = "chain:2";
  config.steps = 2;
  RunResult r2 = run(cmd_compile, config);
  CHECK(r2.code == 0);
  CHECK(r2.out.find("emitted 108 gates") != std::string::npos);  // 2 * (6 + 2*24)

  // epsilon path reports the derived K
  config.steps.reset();
  config.epsilon = 0.5;
  RunResult r3 = run(cmd_compile, config);
  CHECK(r3.code == 0);
  CHECK(r3.out.find("steps: K = 8") != std::string::npos);  // ceil(4*1/0.5)
}

TEST_CASE("verify command") {
  RunConfig config;
  config.lattice = "chain:2";
  config.cutoff = 12;
  config.t = 0.0;
  config.steps = 1;
  RunResult r = run(cmd_verify, config);
  CHECK(r.code == 0);
  CHECK(r.out.find("cubic_commutator_identity") != std::string::npos);
  CHECK(r.out.find("gate_unitarity") != std::string::npos);
  CHECK(r.out.find("evolution_infidelity") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // byte-identical reports under a fixed seed
  RunResult r2 = run(cmd_verify, config);
  CHECK(r2.out == r.out);

  // oversized lattice at this cutoff is a resource error, not a crash
  config.lattice = "grid:2";
  config.cutoff = 12;
  RunResult big = run(cmd_verify, config);
  CHECK(big.code == 1);
  CHECK(big.err.find("budget") != std::string::npos);
}

TEST_CASE("convergence command: commutator sweep") {
  RunConfig config;
  config.commutator_sweep = true;
  config.cutoff = 24;
  config.tau_list = {0.2, 0.1, 0.05, 0.025};
  RunResult r = run(cmd_convergence, config);
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  config.tau_list = {0.2, 0.1};
  CHECK(run(cmd_convergence, config).code == 2);  // needs >= 3 points
}

TEST_CASE("convergence command: identity evolution sits below the noise floor") {
  RunConfig config;
  config.lattice = "chain:2";
  config.J = 0.0;
  config.U = 0.0;
  config.V_dip = 0.0;
  config.t = 0.1;
  config.cutoff = 8;
  config.k_list = {1, 2, 4};
  RunResult r = run(cmd_convergence, config);
  CHECK(r.code == 0);
  CHECK(r.out.find("below noise floor") != std::string::npos);

  config.k_list = {4, 2, 1};
  CHECK(run(cmd_convergence, config).code == 2);  // must be increasing
}
