#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bhcv/workflows.hpp"

namespace {

void add_model_options(CLI::App* cmd, bhcv::RunConfig& config) {
  cmd->add_option("--lattice", config.lattice, "Lattice, chain:N or grid:n")
      ->capture_default_str();
  cmd->add_option("--J", config.J, "Tunneling coupling")->capture_default_str();
  cmd->add_option("--U", config.U, "On-site coupling")->capture_default_str();
  cmd->add_option("--Vdip", config.V_dip, "Dipole coupling (0 disables)")->capture_default_str();
  cmd->add_option("--time", config.t, "Total evolution time")->capture_default_str();
  cmd->add_option("--steps", config.steps, "Product-formula step count K");
  cmd->add_option("--epsilon", config.epsilon, "Accuracy target; K = ceil(C N^2 t^2 / epsilon)");
  cmd->add_option("--C", config.safety_c, "Safety constant for --epsilon")->capture_default_str();
  cmd->add_option("--cutoff", config.cutoff, "Fock cutoff per mode")->capture_default_str();
  cmd->add_option("--seed", config.seed, "State-ensemble seed")->capture_default_str();
  cmd->add_option("--out", config.out_path, "Output file path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile Bose-Hubbard time evolution into continuous-variable photonic gates"};
  app.require_subcommand(1);

  bhcv::RunConfig config;

  CLI::App* compile =
      app.add_subcommand("compile", "Emit the K-step gate sequence as a circuit document");
  add_model_options(compile, config);

  CLI::App* count = app.add_subcommand("count", "Compare enumerated gate counts to closed forms");
  add_model_options(count, config);

  CLI::App* verify =
      app.add_subcommand("verify", "Run operator-identity and evolution checks in Fock space");
  add_model_options(verify, config);

  CLI::App* conv = app.add_subcommand(
      "convergence", "Fit the infidelity-vs-K slope, or the commutator-block residual sweep");
  add_model_options(conv, config);
  conv->add_option("--K-list", config.k_list, "Step counts to sweep")->delimiter(',');
  conv->add_flag("--commutator", config.commutator_sweep,
                 "Sweep the single-mode commutator block residual over --tau-list");
  conv->add_option("--tau-list", config.tau_list, "Cubic strengths for --commutator")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (compile->parsed()) return bhcv::cmd_compile(config, std::cout, std::cerr);
  if (count->parsed()) return bhcv::cmd_count(config, std::cout, std::cerr);
  if (verify->parsed()) return bhcv::cmd_verify(config, std::cout, std::cerr);
  if (conv->parsed()) return bhcv::cmd_convergence(config, std::cout, std::cerr);
  return 2;
}
