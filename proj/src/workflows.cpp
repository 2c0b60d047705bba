#include "bhcv/workflows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "bhcv/checks.hpp"
#include "bhcv/counting.hpp"
#include "bhcv/errors.hpp"
#include "bhcv/focksim.hpp"

namespace bhcv {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << content;
  f.close();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

Lattice parse_lattice_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    int size = 0;
    try {
      size = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("lattice spec '" + spec + "': size is not an integer");
    }
    if (kind == "chain") return build_chain(size);
    if (kind == "grid") return build_grid(size);
  }
  throw std::invalid_argument("lattice spec '" + spec + "': expected chain:N or grid:n");
}

TrotterPlan plan_from_config(const RunConfig& config) {
  if (config.steps && config.epsilon)
    throw std::invalid_argument("provide either --steps or --epsilon, not both");
  const Lattice lattice = parse_lattice_spec(config.lattice);
  ModelParams params;
  params.J = config.J;
  params.U = config.U;
  params.V_dip = config.V_dip;
  params.t = config.t;
  if (config.epsilon)
    return make_plan_epsilon(params, lattice, *config.epsilon, config.safety_c);
  params.K = config.steps.value_or(1);
  return make_plan(params, lattice);
}

int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const TrotterPlan plan = plan_from_config(config);
    if (config.epsilon)
      out << "steps: K = " << plan.params.K << " (epsilon " << fmt("%g", *config.epsilon)
          << ", safety constant " << fmt("%g", config.safety_c) << ")\n";
    else
      out << "steps: K = " << plan.params.K << "\n";
    const CountReport report = compare(plan);
    out << report.render_table();

    const Circuit full = build_full_circuit(plan);
    out << "emitted " << full.gates.size() << " gates over " << full.num_modes << " modes\n";
    const std::string doc = serialize(full);
    if (!config.out_path.empty()) {
      if (!write_file(config.out_path, doc, err)) return 1;
      out << "wrote " << config.out_path << "\n";
    } else {
      out << doc;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const TrotterPlan plan = plan_from_config(config);
    const CountReport report = compare(plan);
    out << report.render_table();
    if (!config.out_path.empty() && !write_file(config.out_path, report.to_json(), err)) return 1;
    return report.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::vector<IdentityCheck> checks = verify_identities(config.cutoff);

    {
      // Unitarity sample across every gate kind at the working cutoff.
      const std::vector<Gate> sample = {
          Gate::fourier(0),
          Gate::fourier_dag(0),
          Gate::p(0, 0.37, StrengthLabel::Custom),
          Gate::v(0, 0.21, StrengthLabel::Custom),
          Gate::q(0, 0.11, StrengthLabel::Custom),
          Gate::cz(0, 1, 0.73, StrengthLabel::Custom),
          Gate::swap(0, 1),
      };
      double worst = 0;
      for (const Gate& g : sample) {
        const FockUnitary u = gate_unitary(g, config.cutoff, g.arity());
        const Eigen::MatrixXcd dev =
            u.matrix.adjoint() * u.matrix -
            Eigen::MatrixXcd::Identity(u.matrix.rows(), u.matrix.cols());
        worst = std::max(worst, dev.cwiseAbs().maxCoeff());
      }
      checks.push_back({"gate_unitarity", config.cutoff, worst, 1e-10, worst <= 1e-10,
                        "max |U†U - I| over all gate kinds"});
    }

    {
      const TrotterPlan plan = plan_from_config(config);
      const double infid =
          evolution_infidelity(plan.params, plan.lattice, config.cutoff, config.cutoff / 2, 20,
                               config.seed);
      const double tol = plan.params.t == 0 ? 1e-12 : 1.0;
      checks.push_back({"evolution_infidelity", config.cutoff, infid, tol, infid <= tol,
                        "K-step circuit vs exact evolution, " + plan.lattice.description() +
                            ", K=" + std::to_string(plan.params.K)});
    }

    out << identity_report_table(checks);
    if (!config.out_path.empty() && !write_file(config.out_path, identity_report_json(checks), err))
      return 1;
    bool all = true;
    for (const IdentityCheck& c : checks) all = all && c.pass;
    return all ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_convergence(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.commutator_sweep) {
      if (config.tau_list.size() < 3)
        throw std::invalid_argument("commutator sweep needs >= 3 tau values");
      std::vector<double> xs, ys;
      for (double tau : config.tau_list) {
        const double resid = commutator_block_residual(tau, config.cutoff, 6);
        out << "tau=" << fmt("%.6g", tau) << "  residual=" << fmt("%.6e", resid) << "\n";
        xs.push_back(tau);
        ys.push_back(std::max(resid, 1e-300));
      }
      const double slope = loglog_slope(xs, ys);
      const bool pass = slope >= 3.5 && slope <= 4.5;
      out << "slope vs tau: " << fmt("%.3f", slope) << " (target 4 +/- 0.5)  "
          << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? 0 : 1;
    }

    if (config.k_list.size() < 3 ||
        !std::is_sorted(config.k_list.begin(), config.k_list.end()) ||
        std::adjacent_find(config.k_list.begin(), config.k_list.end()) != config.k_list.end())
      throw std::invalid_argument("--K-list needs >= 3 strictly increasing values");

    const TrotterPlan base = plan_from_config(config);
    std::vector<double> xs, ys;
    bool all_floor = true;
    for (int k : config.k_list) {
      ModelParams params = base.params;
      params.K = k;
      const double infid = evolution_infidelity(params, base.lattice, config.cutoff,
                                                config.cutoff / 2, 20, config.seed);
      out << "K=" << k << "  infidelity=" << fmt("%.6e", infid) << "\n";
      all_floor = all_floor && infid <= 1e-12;
      xs.push_back(static_cast<double>(k));
      ys.push_back(std::max(infid, 1e-300));
    }
    if (all_floor) {
      out << "below noise floor  PASS\n";
      return 0;
    }
    const double slope = loglog_slope(xs, ys);
    const bool pass = slope >= -1.3 && slope <= -0.7;
    out << "slope vs K: " << fmt("%.3f", slope) << " (target -1 +/- 0.3)  "
        << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bhcv
