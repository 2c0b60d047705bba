#include "bhcv/decompose.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bhcv {

namespace {

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

void append(std::vector<Gate>& out, std::vector<Gate> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

StepStrengths step_strengths(const ModelParams& p) {
  check_finite(p.J, "J");
  check_finite(p.U, "U");
  check_finite(p.V_dip, "V_dip");
  check_finite(p.t, "t");
  if (p.K < 1) throw std::invalid_argument("K must be >= 1");
  const double tk = p.t / p.K;
  if (tk * p.U < 0)
    throw std::invalid_argument("cubic strength undefined: t*U/K < 0 makes g_C imaginary");
  StepStrengths s;
  s.g_J = tk * p.J;
  s.g_U = tk * p.U;
  s.g_C = std::sqrt(tk * 2.0 * p.U / 9.0);
  s.g_V = tk * p.V_dip / 2.0;
  return s;
}

int choose_K(int num_sites, double t, double epsilon, double safety_c) {
  if (num_sites < 1) throw std::invalid_argument("choose_K: N must be >= 1");
  if (!(epsilon > 0)) throw std::invalid_argument("choose_K: epsilon must be > 0");
  if (!(safety_c > 0)) throw std::invalid_argument("choose_K: safety constant must be > 0");
  check_finite(t, "t");
  const double k = std::ceil(safety_c * double(num_sites) * double(num_sites) * t * t / epsilon);
  if (k >= 2147483647.0) throw std::invalid_argument("choose_K: step count overflows int");
  return std::max(1, static_cast<int>(k));
}

TrotterPlan make_plan(const ModelParams& params, const Lattice& lattice) {
  step_strengths(params);  // validate
  return TrotterPlan{params, lattice, std::nullopt, 1.0};
}

TrotterPlan make_plan_epsilon(ModelParams params, const Lattice& lattice, double epsilon,
                              double safety_c) {
  params.K = choose_K(lattice.num_sites, params.t, epsilon, safety_c);
  step_strengths(params);  // validate
  return TrotterPlan{params, lattice, epsilon, safety_c};
}

std::vector<Gate> emit_j_pair(int i, int j, double g_j) {
  if (i == j) throw std::invalid_argument("emit_j_pair: modes must be distinct");
  check_finite(g_j, "g_J");
  return {
      Gate::fourier_dag(i),
      Gate::fourier_dag(j),
      Gate::cz(i, j, -g_j, StrengthLabel::GJ),
      Gate::fourier(i),
      Gate::fourier(j),
      Gate::cz(i, j, -g_j, StrengthLabel::GJ),
  };
}

std::vector<Gate> emit_commutator_block(int mode, double g_c) {
  check_finite(g_c, "g_C");
  const double s = g_c / std::sqrt(2.0);
  auto vp = [&] { return Gate::v(mode, s, StrengthLabel::GC); };
  auto vn = [&] { return Gate::v(mode, -s, StrengthLabel::GCNeg); };
  auto f = [&] { return Gate::fourier(mode); };
  auto fd = [&] { return Gate::fourier_dag(mode); };
  // Application order of exp(i s p^3) exp(i s x^3) exp(-i s p^3) exp(-i s x^3)
  // followed by the sign-inverted block; p^3 factors are Fourier-conjugated.
  return {
      vp(), fd(), vp(), f(),   // first block, read right to left
      vn(), fd(), vn(), f(),
      vn(), fd(), vn(), f(),   // inverted block
      vp(), fd(), vp(), f(),
  };
}

std::vector<Gate> emit_u_site(int mode, double g_u, double g_c) {
  check_finite(g_u, "g_U");
  std::vector<Gate> out = {
      Gate::fourier_dag(mode),
      Gate::p(mode, -g_u, StrengthLabel::GU),
      Gate::fourier(mode),
      Gate::p(mode, -g_u, StrengthLabel::GU),
      Gate::fourier_dag(mode),
      Gate::q(mode, g_u / 2.0, StrengthLabel::GUHalf),
      Gate::fourier(mode),
  };
  append(out, emit_commutator_block(mode, g_c));
  out.push_back(Gate::q(mode, g_u / 2.0, StrengthLabel::GUHalf));
  return out;
}

std::vector<Gate> emit_w(int i, int j, double g_v) {
  if (i == j) throw std::invalid_argument("emit_w: modes must be distinct");
  check_finite(g_v, "g_V");
  return {
      Gate::q(j, -g_v / 3.0, StrengthLabel::GVThirdNeg),
      Gate::q(i, -g_v / 3.0, StrengthLabel::GVThirdNeg),
      Gate::fourier(i),
      Gate::cz(i, j, 2.0, StrengthLabel::Cz2),
      Gate::fourier_dag(i),
      Gate::q(i, g_v / 6.0, StrengthLabel::GVSixth),
      Gate::fourier(i),
      Gate::cz(i, j, -4.0, StrengthLabel::CzM4),
      Gate::fourier_dag(i),
      Gate::q(i, g_v / 6.0, StrengthLabel::GVSixth),
      Gate::fourier(i),
      Gate::cz(i, j, 2.0, StrengthLabel::Cz2),
      Gate::fourier_dag(i),
  };
}

std::vector<Gate> emit_vnn_pair(int i, int j, double g_v) {
  if (i == j) throw std::invalid_argument("emit_vnn_pair: modes must be distinct");
  check_finite(g_v, "g_V");
  std::vector<Gate> out = {
      Gate::fourier_dag(j),
      Gate::p(j, -g_v, StrengthLabel::GV),
      Gate::fourier(j),
      Gate::p(j, -g_v, StrengthLabel::GV),
      Gate::fourier_dag(i),
      Gate::p(i, -g_v, StrengthLabel::GV),
      Gate::fourier(i),
      Gate::p(i, -g_v, StrengthLabel::GV),
  };
  // Four conjugated quartic blocks: plain, j-rotated, i-rotated, both.
  append(out, emit_w(i, j, g_v));
  out.push_back(Gate::fourier_dag(j));
  append(out, emit_w(i, j, g_v));
  out.push_back(Gate::fourier(j));
  out.push_back(Gate::fourier_dag(i));
  append(out, emit_w(i, j, g_v));
  out.push_back(Gate::fourier(i));
  out.push_back(Gate::fourier_dag(j));
  out.push_back(Gate::fourier_dag(i));
  append(out, emit_w(i, j, g_v));
  out.push_back(Gate::fourier(i));
  out.push_back(Gate::fourier(j));
  return out;
}

std::vector<Gate> route_nonlocal(std::vector<Gate> block, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) throw std::invalid_argument("route_nonlocal: modes must be distinct");
  const int d = j - i;
  if (d == 1) return block;
  // Re-index the inner block onto the adjacent pair (i, i+1).
  for (Gate& g : block) {
    if (g.a == j) g.a = i + 1;
    if (g.b == j) g.b = i + 1;
  }
  std::vector<Gate> out;
  out.reserve(block.size() + 2 * (d - 1));
  for (int w = j - 1; w > i; --w) out.push_back(Gate::swap(w, w + 1));
  append(out, std::move(block));
  for (int w = i + 1; w < j; ++w) out.push_back(Gate::swap(w, w + 1));
  return out;
}

Circuit build_trotter_step(const TrotterPlan& plan) {
  const StepStrengths s = step_strengths(plan.params);
  Circuit c;
  c.num_modes = plan.lattice.num_sites;
  for (const auto& [i, j] : plan.lattice.edges)
    append(c.gates, route_nonlocal(emit_j_pair(i, j, s.g_J), i, j));
  for (int site = 0; site < plan.lattice.num_sites; ++site)
    append(c.gates, emit_u_site(site, s.g_U, s.g_C));
  if (plan.params.V_dip != 0) {
    for (const auto& [i, j] : plan.lattice.edges)
      append(c.gates, route_nonlocal(emit_vnn_pair(i, j, s.g_V), i, j));
  }
  return c;
}

Circuit build_full_circuit(const TrotterPlan& plan) {
  Circuit step = build_trotter_step(plan);
  Circuit full;
  full.num_modes = step.num_modes;
  full.gates.reserve(step.gates.size() * static_cast<size_t>(plan.params.K));
  for (int k = 0; k < plan.params.K; ++k)
    full.gates.insert(full.gates.end(), step.gates.begin(), step.gates.end());
  return full;
}

}  // namespace bhcv
