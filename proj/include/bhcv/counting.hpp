#pragma once

#include <map>
#include <string>
#include <vector>

#include "bhcv/circuit.hpp"
#include "bhcv/decompose.hpp"
#include "bhcv/lattice.hpp"

namespace bhcv {

using LabelKey = std::pair<GateKind, StrengthLabel>;

// Fixed rendering order for count tuples:
// (F, P(g_U), P(g_V), V(g_C), Q(g_U/2), Q(g_V/3), Q(g_V/6), Cz(g_J), Cz(2), Cz(-4), SWAP).
const std::vector<LabelKey>& tuple_order();
std::string label_key_name(const LabelKey& key);

// Closed-form per-step counts. Grid formulas, n x n sites:
//   F = 92n^2 - 80n, P(g_U) = 2n^2, P(g_V) = 8(n^2-n), V(g_C) = 8n^2,
//   Q(g_U/2) = 2n^2, Q(g_V/3) = Q(g_V/6) = 16(n^2-n), Cz(g_J) = 4(n^2-n),
//   Cz(2) = 16(n^2-n), Cz(-4) = 8(n^2-n).
// Cz(-4) follows the per-gate tally (4 per pair gate, 2(n^2-n) gates); the
// aggregate summary value 16(n^2-n) double-counts it and is flagged, not
// adopted. Without the density-density term the dipole columns are zero.
std::map<LabelKey, long long> closed_form_grid(int n, bool with_dipole = true);

// Chains: N-1 hopping blocks, N on-site blocks, N-1 density-density blocks.
std::map<LabelKey, long long> closed_form_chain(int num_sites, bool with_dipole);

// SWAP bound 4(n^3 - n^2) with dipole, 2(n^3 - n^2) without; exact routed
// count 4(n-1)(n^2-n) resp. 2(n-1)(n^2-n).
long long grid_swap_bound(int n, bool with_dipole = true);
long long grid_swap_enumerated(int n, bool with_dipole = true);

struct LabelCount {
  LabelKey key;
  long long enumerated = 0;
  long long closed_form = 0;
  bool pass = false;
};

struct CountReport {
  std::string lattice;
  int steps = 1;
  bool with_dipole = false;
  std::vector<LabelCount> labels;  // tuple order, only labels present
  long long swap_enumerated = 0;
  long long swap_bound = 0;
  bool swap_pass = true;
  std::vector<std::string> notes;

  bool all_pass() const;
  // Per-step tuple in the fixed order, e.g. "(60, 8, 32, 8, 6)".
  std::string tuple_string(bool include_swap = false) const;
  std::string render_table() const;
  std::string to_json() const;
};

// Enumerates one step via build_trotter_step and compares per label against
// the closed forms; K-multiplied totals go into the rendered report.
CountReport compare(const TrotterPlan& plan);

}  // namespace bhcv
