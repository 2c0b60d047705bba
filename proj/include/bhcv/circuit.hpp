#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bhcv {

// Single-mode gates act on mode a; Cz and Swap act on the pair (a, b).
// Semantics over quadratures with [x, p] = i/2:
//   Fourier     exp(i (pi/2) a†a)         FourierDag  its inverse
//   P(s)        exp(i s x²)               V(s)        exp(i s x³)
//   Q(s)        exp(i s x⁴)               Cz(g)       exp(i g x_a x_b)
//   Swap        exchanges the two mode factors
enum class GateKind { Fourier, FourierDag, P, V, Q, Cz, Swap };

// Symbolic tag identifying which model coefficient a strength instantiates.
// Tags are carried in the IR rather than recovered from numeric values,
// since distinct coefficients can coincide numerically.
enum class StrengthLabel {
  None,
  GJ,          // g_J   = t J / K          (Cz)
  GU,          // g_U   = t U / K          (P)
  GUHalf,      // g_U/2                    (Q)
  GC,          // g_C   = sqrt(t/K * 2U/9) (V)
  GCNeg,       // -g_C                     (V)
  GV,          // g_V   = t V_dip / 2K     (P)
  GVThird,     // g_V/3                    (Q)
  GVThirdNeg,  // -g_V/3                   (Q)
  GVSixth,     // g_V/6                    (Q)
  GVSixthNeg,  // -g_V/6                   (Q)
  Cz2,         // fixed +2                 (Cz)
  CzM4,        // fixed -4                 (Cz)
  Custom,
};

struct Gate {
  GateKind kind = GateKind::Fourier;
  int a = 0;            // first (or only) mode
  int b = -1;           // second mode for Cz/Swap, -1 otherwise
  double strength = 0;  // meaningful for P/V/Q/Cz only
  StrengthLabel label = StrengthLabel::None;

  static Gate fourier(int mode);
  static Gate fourier_dag(int mode);
  static Gate p(int mode, double strength, StrengthLabel label);
  static Gate v(int mode, double strength, StrengthLabel label);
  static Gate q(int mode, double strength, StrengthLabel label);
  static Gate cz(int mode_a, int mode_b, double strength, StrengthLabel label);
  static Gate swap(int mode_a, int mode_b);

  int arity() const { return (kind == GateKind::Cz || kind == GateKind::Swap) ? 2 : 1; }
  bool has_strength() const {
    return kind == GateKind::P || kind == GateKind::V || kind == GateKind::Q ||
           kind == GateKind::Cz;
  }
  bool operator==(const Gate&) const = default;
};

// Gates are stored in application order: gates.front() acts on the state
// first, i.e. the list [G1, G2, ...] denotes the operator ...·U(G2)·U(G1).
struct Circuit {
  int num_modes = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

// Throws std::invalid_argument naming the first ill-formed gate.
void validate_circuit(const Circuit& c);

// Count key after pooling: FourierDag counts as Fourier, and signed labels
// pool under their magnitude class (-g_C -> g_C, etc.). Counts are keyed by
// (kind, label) so equal-magnitude strengths of different origin stay apart.
struct GateHistogram {
  std::map<std::pair<GateKind, StrengthLabel>, long long> counts;

  long long total() const;
  long long at(GateKind kind, StrengthLabel label = StrengthLabel::None) const;
  GateHistogram& operator+=(const GateHistogram& other);
  bool operator==(const GateHistogram&) const = default;
};

GateHistogram count_gates(const Circuit& c);

// Pooled key for a gate as used by GateHistogram.
std::pair<GateKind, StrengthLabel> pooled_key(const Gate& g);

const char* kind_name(GateKind k);          // "F", "Fdag", "P", "V", "Q", "CZ", "SWAP"
const char* label_name(StrengthLabel l);    // "g_J", "g_U", ..., "custom"

// Circuit document (JSON): {"format_version":"1","num_modes":N,"gates":[...]}.
// Strengths round-trip bit-exactly. deserialize throws ParseError naming the
// offending gate index.
std::string serialize(const Circuit& c);
Circuit deserialize(const std::string& text);

}  // namespace bhcv
