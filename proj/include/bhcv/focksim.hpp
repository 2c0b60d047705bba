#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bhcv/circuit.hpp"
#include "bhcv/decompose.hpp"
#include "bhcv/lattice.hpp"

namespace bhcv {

// Truncated Fock-space verification backend. Quadrature convention:
// x = (a + a†)/2, p = (a - a†)/(2i), so [x, p] = i/2 away from the top
// truncation level. Multi-mode basis index: mode 0 is the most significant
// digit, index = sum_k m_k * d^(M-1-k).

struct FockOperator {
  int cutoff = 0;
  int num_modes = 0;
  Eigen::MatrixXcd matrix;
};

struct FockUnitary {
  int cutoff = 0;
  int num_modes = 0;
  Eigen::MatrixXcd matrix;
};

// d^num_modes, throwing ResourceError beyond the desk-scale budget.
Eigen::Index fock_dimension(int cutoff, int num_modes);

Eigen::MatrixXcd ladder_operator(int cutoff);    // a, with a[m, m+1] = sqrt(m+1)
Eigen::MatrixXcd position_operator(int cutoff);  // (a + a†)/2
Eigen::MatrixXcd momentum_operator(int cutoff);  // (a - a†)/(2i)
Eigen::MatrixXcd number_operator(int cutoff);    // a†a

// exp(i theta G) for Hermitian G, via eigendecomposition.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& generator, double theta);

// Full-space unitary of a single gate.
FockUnitary gate_unitary(const Gate& g, int cutoff, int num_modes);

// acc <- U(g) * acc, contracting only the touched tensor indices.
void apply_gate(Eigen::MatrixXcd& acc, const Gate& g, int cutoff, int num_modes);

// Ordered product of gate unitaries; the first-listed gate acts first.
FockUnitary circuit_unitary(const Circuit& c, int cutoff);

FockOperator exact_hamiltonian(const ModelParams& params, const Lattice& lattice, int cutoff);

// exp(i t H); throws std::invalid_argument when H is not Hermitian.
FockUnitary exact_evolution(const FockOperator& hamiltonian, double t);

// 1 - mean over states of |<psi| Ua† Ub |psi>|^2. Global-phase invariant.
// Throws when a state norm deviates from 1 by more than 1e-8.
double infidelity(const FockUnitary& a, const FockUnitary& b,
                  const std::vector<Eigen::VectorXcd>& states);

// Deterministic pseudo-random superpositions supported on per-mode
// occupation <= max_occupation. Same (seed, dims) always gives the same
// states.
std::vector<Eigen::VectorXcd> interior_state_ensemble(int cutoff, int num_modes,
                                                      int max_occupation, int count,
                                                      std::uint64_t seed);

struct IdentityCheck {
  std::string name;
  int cutoff = 0;
  double deviation = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

// Interior-block checks of the operator identities behind the decomposition:
//   - [x, p] = i/2
//   - F x F† = p
//   - 12 x_i^2 x_j^2 = (x_i - x_j)^4 + (x_i + x_j)^4 - 2 x_i^4 - 2 x_j^4
//   - x^2 p^2 + p^2 x^2 = -(4/9) i [x^3, p^3] - 1/6
// The quadratic-quartic relation is checked in its constant-corrected form;
// the fitted scalar offset (-1/6, a pure global-phase shift when
// exponentiated) is reported as its own row.
std::vector<IdentityCheck> verify_identities(int cutoff);

// Rows rendered as {check_name, cutoff, deviation, tolerance, pass}.
std::string identity_report_json(const std::vector<IdentityCheck>& checks);
std::string identity_report_table(const std::vector<IdentityCheck>& checks);

}  // namespace bhcv
