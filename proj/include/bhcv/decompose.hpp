#pragma once

#include <optional>
#include <vector>

#include "bhcv/circuit.hpp"
#include "bhcv/lattice.hpp"

namespace bhcv {

// Model couplings and the step count for one compiled evolution.
//   H = -(J/2) sum_edges (a†_i a_j + a†_j a_i)
//       + (U/2) sum_i n_i (n_i - 1)
//       + V_dip sum_edges n_i n_j
// evolved as exp(i t H), split into K product-formula steps.
struct ModelParams {
  double J = 0;
  double U = 0;
  double V_dip = 0;  // 0 disables the density-density circuits
  double t = 0;
  int K = 1;
};

// Per-step gate strengths derived from ModelParams.
struct StepStrengths {
  double g_J;  // t J / K
  double g_U;  // t U / K
  double g_C;  // sqrt(t/K * 2U/9); requires t*U >= 0
  double g_V;  // t V_dip / (2K)
};

// Throws std::invalid_argument when t*U < 0 (the cubic strength would be
// imaginary) or K < 1 or any coupling is non-finite.
StepStrengths step_strengths(const ModelParams& p);

// K = max(1, ceil(C * N^2 t^2 / epsilon)). Throws on epsilon <= 0 or C <= 0.
int choose_K(int num_sites, double t, double epsilon, double safety_c);

struct TrotterPlan {
  ModelParams params;
  Lattice lattice;
  std::optional<double> epsilon_target;
  double safety_constant = 1.0;
};

// Plan with an explicit step count.
TrotterPlan make_plan(const ModelParams& params, const Lattice& lattice);
// Plan with K derived from an accuracy target via choose_K.
TrotterPlan make_plan_epsilon(ModelParams params, const Lattice& lattice, double epsilon,
                              double safety_c = 1.0);

// All emitters return gates in application order (first element acts first).

// Hopping block for one edge: the Cz(-g_J) conjugation pattern realizing
// exp(-i g_J x_i x_j) exp(-i g_J p_i p_j). Histogram (F, Cz) = (4, 2).
std::vector<Gate> emit_j_pair(int i, int j, double g_j);

// Second-order group-commutator product approximating
// exp(g_C^2 [x^3, p^3]) with O(g_C^4) defect: two 4-factor blocks, the
// second with all exponent signs inverted, cubic strengths g_C/sqrt(2).
// Contributes 8 V and 8 F gates.
std::vector<Gate> emit_commutator_block(int mode, double g_c);

// On-site interaction block approximating exp(i (t/K)(U/2) n(n-1)) up to a
// global phase. Histogram (F, P, V, Q) = (12, 2, 8, 2).
std::vector<Gate> emit_u_site(int mode, double g_u, double g_c);

// Two-mode quartic identity: the returned product equals
// exp(i 2 g_V x_i^2 x_j^2) exactly (Gaussian conjugation of quartics; the
// fixed Cz strengths +2/-4 set the quadrature shifts).
std::vector<Gate> emit_w(int i, int j, double g_v);

// Density-density block for one edge approximating exp(i 2 g_V n_i n_j) up
// to a global phase. Histogram (F, P, Q(g_V/3), Q(g_V/6), Cz2, CzM4) =
// (36, 4, 8, 8, 8, 4).
std::vector<Gate> emit_vnn_pair(int i, int j, double g_v);

// Wraps a two-mode block on logical pair (i, j), i < j, with the d-1 SWAPs
// that bring mode j adjacent to mode i and back (d = j - i). The inner block
// is re-indexed to (i, i+1). d = 1 returns the block unchanged.
std::vector<Gate> route_nonlocal(std::vector<Gate> block, int i, int j);

// One product-formula step: hopping blocks over all edges, then on-site
// blocks over all sites, then (when V_dip != 0) density-density blocks over
// all edges, in lattice order, with SWAP routing for non-adjacent pairs.
Circuit build_trotter_step(const TrotterPlan& plan);

// The step circuit repeated K times.
Circuit build_full_circuit(const TrotterPlan& plan);

}  // namespace bhcv
