#include "bhcv/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "bhcv/errors.hpp"

namespace bhcv {

namespace {

using nlohmann::json;

void check_strength(double s, const char* who) {
  if (!std::isfinite(s)) throw std::invalid_argument(std::string(who) + ": strength must be finite");
}

bool label_allowed(GateKind k, StrengthLabel l) {
  switch (k) {
    case GateKind::Fourier:
    case GateKind::FourierDag:
    case GateKind::Swap:
      return l == StrengthLabel::None;
    case GateKind::P:
      return l == StrengthLabel::GU || l == StrengthLabel::GV || l == StrengthLabel::Custom;
    case GateKind::V:
      return l == StrengthLabel::GC || l == StrengthLabel::GCNeg || l == StrengthLabel::Custom;
    case GateKind::Q:
      return l == StrengthLabel::GUHalf || l == StrengthLabel::GVThird ||
             l == StrengthLabel::GVThirdNeg || l == StrengthLabel::GVSixth ||
             l == StrengthLabel::GVSixthNeg || l == StrengthLabel::Custom;
    case GateKind::Cz:
      return l == StrengthLabel::GJ || l == StrengthLabel::Cz2 || l == StrengthLabel::CzM4 ||
             l == StrengthLabel::Custom;
  }
  return false;
}

}  // namespace

Gate Gate::fourier(int mode) { return Gate{GateKind::Fourier, mode, -1, 0, StrengthLabel::None}; }
Gate Gate::fourier_dag(int mode) {
  return Gate{GateKind::FourierDag, mode, -1, 0, StrengthLabel::None};
}

Gate Gate::p(int mode, double strength, StrengthLabel label) {
  check_strength(strength, "P");
  Gate g{GateKind::P, mode, -1, strength, label};
  if (!label_allowed(g.kind, label)) throw std::invalid_argument("P: label not valid for kind");
  return g;
}

Gate Gate::v(int mode, double strength, StrengthLabel label) {
  check_strength(strength, "V");
  Gate g{GateKind::V, mode, -1, strength, label};
  if (!label_allowed(g.kind, label)) throw std::invalid_argument("V: label not valid for kind");
  return g;
}

Gate Gate::q(int mode, double strength, StrengthLabel label) {
  check_strength(strength, "Q");
  Gate g{GateKind::Q, mode, -1, strength, label};
  if (!label_allowed(g.kind, label)) throw std::invalid_argument("Q: label not valid for kind");
  return g;
}

Gate Gate::cz(int mode_a, int mode_b, double strength, StrengthLabel label) {
  check_strength(strength, "Cz");
  if (mode_a == mode_b) throw std::invalid_argument("Cz: modes must be distinct");
  Gate g{GateKind::Cz, mode_a, mode_b, strength, label};
  if (!label_allowed(g.kind, label)) throw std::invalid_argument("Cz: label not valid for kind");
  return g;
}

Gate Gate::swap(int mode_a, int mode_b) {
  if (mode_a == mode_b) throw std::invalid_argument("Swap: modes must be distinct");
  return Gate{GateKind::Swap, mode_a, mode_b, 0, StrengthLabel::None};
}

void validate_circuit(const Circuit& c) {
  if (c.num_modes < 1) throw std::invalid_argument("circuit: num_modes must be >= 1");
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string at = "gate " + std::to_string(i) + ": ";
    if (g.a < 0 || g.a >= c.num_modes)
      throw std::invalid_argument(at + "mode index out of range");
    if (g.arity() == 2) {
      if (g.b < 0 || g.b >= c.num_modes)
        throw std::invalid_argument(at + "mode index out of range");
      if (g.a == g.b) throw std::invalid_argument(at + "two-mode gate on identical modes");
    } else if (g.b != -1) {
      throw std::invalid_argument(at + "single-mode gate carries a second mode");
    }
    if (g.has_strength() && !std::isfinite(g.strength))
      throw std::invalid_argument(at + "strength must be finite");
    if (!label_allowed(g.kind, g.label))
      throw std::invalid_argument(at + "strength label not valid for gate kind");
  }
}

std::pair<GateKind, StrengthLabel> pooled_key(const Gate& g) {
  GateKind k = g.kind == GateKind::FourierDag ? GateKind::Fourier : g.kind;
  StrengthLabel l = g.label;
  switch (l) {
    case StrengthLabel::GCNeg: l = StrengthLabel::GC; break;
    case StrengthLabel::GVThirdNeg: l = StrengthLabel::GVThird; break;
    case StrengthLabel::GVSixthNeg: l = StrengthLabel::GVSixth; break;
    default: break;
  }
  return {k, l};
}

long long GateHistogram::total() const {
  long long n = 0;
  for (const auto& [key, c] : counts) n += c;
  return n;
}

long long GateHistogram::at(GateKind kind, StrengthLabel label) const {
  auto it = counts.find({kind, label});
  return it == counts.end() ? 0 : it->second;
}

GateHistogram& GateHistogram::operator+=(const GateHistogram& other) {
  for (const auto& [key, c] : other.counts) counts[key] += c;
  return *this;
}

GateHistogram count_gates(const Circuit& c) {
  GateHistogram h;
  for (const Gate& g : c.gates) h.counts[pooled_key(g)] += 1;
  return h;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Fourier: return "F";
    case GateKind::FourierDag: return "Fdag";
    case GateKind::P: return "P";
    case GateKind::V: return "V";
    case GateKind::Q: return "Q";
    case GateKind::Cz: return "CZ";
    case GateKind::Swap: return "SWAP";
  }
  return "?";
}

const char* label_name(StrengthLabel l) {
  switch (l) {
    case StrengthLabel::None: return "";
    case StrengthLabel::GJ: return "g_J";
    case StrengthLabel::GU: return "g_U";
    case StrengthLabel::GUHalf: return "g_U/2";
    case StrengthLabel::GC: return "g_C";
    case StrengthLabel::GCNeg: return "-g_C";
    case StrengthLabel::GV: return "g_V";
    case StrengthLabel::GVThird: return "g_V/3";
    case StrengthLabel::GVThirdNeg: return "-g_V/3";
    case StrengthLabel::GVSixth: return "g_V/6";
    case StrengthLabel::GVSixthNeg: return "-g_V/6";
    case StrengthLabel::Cz2: return "cz2";
    case StrengthLabel::CzM4: return "czm4";
    case StrengthLabel::Custom: return "custom";
  }
  return "?";
}

namespace {

GateKind kind_from_name(const std::string& s, const std::string& at) {
  if (s == "F") return GateKind::Fourier;
  if (s == "Fdag") return GateKind::FourierDag;
  if (s == "P") return GateKind::P;
  if (s == "V") return GateKind::V;
  if (s == "Q") return GateKind::Q;
  if (s == "CZ") return GateKind::Cz;
  if (s == "SWAP") return GateKind::Swap;
  throw ParseError(at + "unknown gate kind '" + s + "'");
}

StrengthLabel label_from_name(const std::string& s, const std::string& at) {
  static const std::map<std::string, StrengthLabel> table = {
      {"g_J", StrengthLabel::GJ},          {"g_U", StrengthLabel::GU},
      {"g_U/2", StrengthLabel::GUHalf},    {"g_C", StrengthLabel::GC},
      {"-g_C", StrengthLabel::GCNeg},      {"g_V", StrengthLabel::GV},
      {"g_V/3", StrengthLabel::GVThird},   {"-g_V/3", StrengthLabel::GVThirdNeg},
      {"g_V/6", StrengthLabel::GVSixth},   {"-g_V/6", StrengthLabel::GVSixthNeg},
      {"cz2", StrengthLabel::Cz2},         {"czm4", StrengthLabel::CzM4},
      {"custom", StrengthLabel::Custom},
  };
  auto it = table.find(s);
  if (it == table.end()) throw ParseError(at + "unknown strength label '" + s + "'");
  return it->second;
}

}  // namespace

std::string serialize(const Circuit& c) {
  validate_circuit(c);
  json doc;
  doc["format_version"] = "1";
  doc["num_modes"] = c.num_modes;
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    jg["kind"] = kind_name(g.kind);
    json modes = json::array();
    modes.push_back(g.a);
    if (g.arity() == 2) modes.push_back(g.b);
    jg["modes"] = modes;
    if (g.has_strength()) {
      jg["strength"] = g.strength;
      jg["strength_label"] = label_name(g.label);
    }
    gates.push_back(jg);
  }
  doc["gates"] = gates;
  return doc.dump(2) + "\n";
}

Circuit deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("circuit document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("circuit document: not an object");
  if (!doc.contains("format_version") || doc["format_version"] != "1")
    throw ParseError("circuit document: missing or unsupported format_version");
  if (!doc.contains("num_modes") || !doc["num_modes"].is_number_integer())
    throw ParseError("circuit document: missing num_modes");
  Circuit c;
  c.num_modes = doc["num_modes"].get<int>();
  if (c.num_modes < 1) throw ParseError("circuit document: num_modes must be >= 1");
  if (!doc.contains("gates") || !doc["gates"].is_array())
    throw ParseError("circuit document: missing gates array");

  size_t idx = 0;
  for (const json& jg : doc["gates"]) {
    const std::string at = "gate " + std::to_string(idx) + ": ";
    if (!jg.is_object()) throw ParseError(at + "not an object");
    if (!jg.contains("kind") || !jg["kind"].is_string()) throw ParseError(at + "missing kind");
    Gate g;
    g.kind = kind_from_name(jg["kind"].get<std::string>(), at);
    if (!jg.contains("modes") || !jg["modes"].is_array())
      throw ParseError(at + "missing modes");
    const json& modes = jg["modes"];
    if (static_cast<int>(modes.size()) != g.arity())
      throw ParseError(at + "expected " + std::to_string(g.arity()) + " mode(s)");
    for (const json& m : modes)
      if (!m.is_number_integer()) throw ParseError(at + "mode index must be an integer");
    g.a = modes[0].get<int>();
    if (g.arity() == 2) {
      g.b = modes[1].get<int>();
      if (g.a == g.b) throw ParseError(at + "two-mode gate on identical modes");
    }
    if (g.a < 0 || g.a >= c.num_modes || (g.arity() == 2 && (g.b < 0 || g.b >= c.num_modes)))
      throw ParseError(at + "mode index out of range");
    if (g.has_strength()) {
      if (!jg.contains("strength") || !jg["strength"].is_number())
        throw ParseError(at + "missing strength");
      g.strength = jg["strength"].get<double>();
      if (!std::isfinite(g.strength)) throw ParseError(at + "strength must be finite");
      if (jg.contains("strength_label"))
        g.label = label_from_name(jg["strength_label"].get<std::string>(), at);
      else
        g.label = StrengthLabel::Custom;
    } else if (jg.contains("strength") || jg.contains("strength_label")) {
      throw ParseError(at + "gate kind carries no strength");
    }
    if (!label_allowed(g.kind, g.label))
      throw ParseError(at + "strength label not valid for gate kind");
    c.gates.push_back(g);
    ++idx;
  }
  return c;
}

}  // namespace bhcv
