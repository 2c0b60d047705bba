#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bhcv/decompose.hpp"
#include "bhcv/lattice.hpp"

namespace bhcv {

// Shared configuration for the CLI workflows. Exactly one of steps/epsilon
// selects the step count; neither defaults to steps = 1.
struct RunConfig {
  std::string lattice = "chain:2";  // "chain:N" or "grid:n"
  double J = 1.0;
  double U = 1.0;
  double V_dip = 0.0;
  double t = 0.1;
  std::optional<int> steps;
  std::optional<double> epsilon;
  double safety_c = 1.0;
  int cutoff = 24;
  std::uint64_t seed = 42;
  std::string out_path;

  std::vector<int> k_list = {1, 2, 4, 8, 16};
  std::vector<double> tau_list = {0.2, 0.1, 0.05, 0.025};
  bool commutator_sweep = false;
};

Lattice parse_lattice_spec(const std::string& spec);
TrotterPlan plan_from_config(const RunConfig& config);

// Each returns a process exit code: 0 success / all checks pass, 1 failed
// checks or I/O errors, 2 invalid configuration.
int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_convergence(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bhcv
