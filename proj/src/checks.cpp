#include "bhcv/checks.hpp"

#include <cmath>
#include <stdexcept>

namespace bhcv {

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("loglog_slope: need >= 2 matched points");
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0))
      throw std::invalid_argument("loglog_slope: points must be positive");
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double w_block_infidelity(int cutoff, double t_over_k, double v_dip, int max_occupation,
                          int count, std::uint64_t seed) {
  const double g_v = t_over_k * v_dip / 2.0;
  Circuit block{2, emit_w(0, 1, g_v)};
  const FockUnitary u = circuit_unitary(block, cutoff);

  const Eigen::MatrixXcd x2 = position_operator(cutoff) * position_operator(cutoff);
  const Eigen::Index d = cutoff;
  Eigen::MatrixXcd gen(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) gen.block(i * d, j * d, d, d) = x2(i, j) * x2;
  const FockUnitary target{cutoff, 2, unitary_exp(gen, 2.0 * g_v)};

  const auto states = interior_state_ensemble(cutoff, 2, max_occupation, count, seed);
  return infidelity(target, u, states);
}

double commutator_block_residual(double tau, int cutoff, int interior_levels) {
  Circuit block{1, emit_commutator_block(0, tau)};
  const FockUnitary u = circuit_unitary(block, cutoff);

  const Eigen::MatrixXcd x = position_operator(cutoff);
  const Eigen::MatrixXcd p = momentum_operator(cutoff);
  const Eigen::MatrixXcd x3 = x * x * x, p3 = p * p * p;
  const Eigen::MatrixXcd gen = std::complex<double>(0, -1) * (x3 * p3 - p3 * x3);
  const Eigen::MatrixXcd target = unitary_exp(gen, tau * tau);

  double dev = 0;
  for (int i = 0; i < interior_levels; ++i)
    for (int j = 0; j < interior_levels; ++j)
      dev = std::max(dev, std::abs(u.matrix(i, j) - target(i, j)));
  return dev;
}

double evolution_infidelity(const ModelParams& params, const Lattice& lattice, int cutoff,
                            int max_occupation, int count, std::uint64_t seed) {
  const TrotterPlan plan = make_plan(params, lattice);
  const FockUnitary compiled = circuit_unitary(build_full_circuit(plan), cutoff);
  const FockUnitary exact = exact_evolution(exact_hamiltonian(params, lattice, cutoff), params.t);
  const auto states =
      interior_state_ensemble(cutoff, lattice.num_sites, max_occupation, count, seed);
  return infidelity(exact, compiled, states);
}

}  // namespace bhcv
