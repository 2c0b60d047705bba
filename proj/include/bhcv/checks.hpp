#pragma once

#include <cstdint>
#include <vector>

#include "bhcv/decompose.hpp"
#include "bhcv/focksim.hpp"
#include "bhcv/lattice.hpp"

namespace bhcv {

// Least-squares slope of log(y) vs log(x); requires >= 2 positive points.
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// Infidelity of the emitted two-mode quartic block against the exact
// exp(i 2 g_V x_i^2 x_j^2), measured on the seeded interior ensemble with
// per-mode occupation <= max_occupation. g_V = t_over_k * v_dip / 2.
double w_block_infidelity(int cutoff, double t_over_k, double v_dip, int max_occupation,
                          int count, std::uint64_t seed);

// Interior-projected max-abs deviation of the commutator-simulation block
// from exp(tau^2 [x^3, p^3]); the projector keeps levels < interior_levels.
double commutator_block_residual(double tau, int cutoff, int interior_levels);

// Infidelity of the K-step compiled circuit against exp(i t H) on the
// seeded interior ensemble.
double evolution_infidelity(const ModelParams& params, const Lattice& lattice, int cutoff,
                            int max_occupation, int count, std::uint64_t seed);

}  // namespace bhcv
