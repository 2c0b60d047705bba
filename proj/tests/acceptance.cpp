// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// selected criterion fails. An optional argument selects a single criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "bhcv/checks.hpp"
#include "bhcv/counting.hpp"
#include "bhcv/decompose.hpp"
#include "bhcv/focksim.hpp"
#include "bhcv/workflows.hpp"

using namespace bhcv;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

bool tuple_equals(const GateHistogram& h, const std::vector<std::pair<LabelKey, long long>>& want) {
  for (const auto& [key, value] : want)
    if (h.at(key.first, key.second) != value) return false;
  return true;
}

Outcome criterion_1() {
  ModelParams params{1.0, 1.0, 0.0, 1.0, 1};
  GateHistogram h = count_gates(build_trotter_step(make_plan(params, build_chain(4))));
  const bool ok = tuple_equals(h, {{{GateKind::Fourier, StrengthLabel::None}, 60},
                                   {{GateKind::P, StrengthLabel::GU}, 8},
                                   {{GateKind::V, StrengthLabel::GC}, 32},
                                   {{GateKind::Q, StrengthLabel::GUHalf}, 8},
                                   {{GateKind::Cz, StrengthLabel::GJ}, 6}}) &&
                  h.total() == 114;
  CountReport r = compare(make_plan(params, build_chain(4)));
  return {ok && r.all_pass(), "1-D step counts " + r.tuple_string()};
}

Outcome criterion_2() {
  const Lattice chain = build_chain(4);
  const double g_v = 0.5 * 0.25;  // any nonzero strength; counts are symbolic
  Circuit dipole_only{4, {}};
  for (const auto& [i, j] : chain.edges) {
    auto block = emit_vnn_pair(i, j, g_v);
    dipole_only.gates.insert(dipole_only.gates.end(), block.begin(), block.end());
  }
  GateHistogram hd = count_gates(dipole_only);
  const bool sub_ok = tuple_equals(hd, {{{GateKind::Fourier, StrengthLabel::None}, 108},
                                        {{GateKind::P, StrengthLabel::GV}, 12},
                                        {{GateKind::Q, StrengthLabel::GVThird}, 24},
                                        {{GateKind::Q, StrengthLabel::GVSixth}, 24},
                                        {{GateKind::Cz, StrengthLabel::Cz2}, 24},
                                        {{GateKind::Cz, StrengthLabel::CzM4}, 12}});

  ModelParams params{1.0, 1.0, 0.5, 1.0, 1};
  CountReport r = compare(make_plan(params, chain));
  const bool combined_ok =
      r.all_pass() && r.tuple_string() == "(168, 8, 12, 32, 8, 24, 24, 6, 24, 12)";
  return {sub_ok && combined_ok,
          "dipole sub-circuit (108, 12, 24, 24, 24, 12); combined " + r.tuple_string()};
}

Outcome criterion_3() {
  bool ok = true;
  std::string detail = "2-D counts for n=2,3,4";
  for (int n = 2; n <= 4; ++n) {
    ModelParams params{1.0, 1.0, 0.5, 1.0, 1};
    CountReport r = compare(make_plan(params, build_grid(n)));
    const long long nn = static_cast<long long>(n) * n;
    bool czm4_ok = false;
    for (const LabelCount& lc : r.labels)
      if (lc.key == LabelKey{GateKind::Cz, StrengthLabel::CzM4})
        czm4_ok = lc.enumerated == 8 * (nn - n);
    const bool flagged = !r.notes.empty() && r.notes[0].find("16(n^2-n)") != std::string::npos;
    const bool swaps_ok = r.swap_enumerated == 4LL * (n - 1) * (nn - n) &&
                          r.swap_enumerated <= 4 * (nn * n - nn);
    if (!(r.all_pass() && czm4_ok && flagged && swaps_ok)) {
      ok = false;
      detail += " [n=" + std::to_string(n) + " mismatch]";
    }
  }
  return {ok, detail};
}

Outcome criterion_4() {
  auto checks = verify_identities(24);
  bool ok = true;
  double quartic = -1, cubic = -1;
  for (const auto& c : checks) {
    ok = ok && c.pass;
    if (c.name == "quartic_binomial") quartic = c.deviation;
    if (c.name == "cubic_commutator_identity") cubic = c.deviation;
  }
  return {ok, "operator identities at d=24: quadratic-quartic relation dev " +
                  fmt("%.1e", cubic) + " (scalar offset -1/6 flagged), binomial dev " +
                  fmt("%.1e", quartic)};
}

Outcome criterion_5(std::string& info) {
  const double infid = w_block_infidelity(14, 0.05, 1.0, 7, 20, kSeed);
  const double deep = w_block_infidelity(28, 0.05, 1.0, 3, 20, kSeed);
  info = "[info] supplementary: two-mode quartic block at d=28, occupation<=3: infidelity " +
         fmt("%.2e", deep) + (deep <= 1e-6 ? " <= 1e-06 (identity exact; residual is truncation)"
                                           : " (above 1e-06)");
  return {infid <= 1e-6,
          "two-mode quartic block exactness at d=14, occupation<=7: infidelity " +
              fmt("%.2e", infid) + " vs 1e-06"};
}

Outcome criterion_6(std::string& info) {
  const Lattice lat = build_chain(2);
  auto sweep = [&](double v_dip) {
    std::vector<double> xs, ys;
    for (int k : {1, 2, 4, 8, 16}) {
      ModelParams p{1.0, 1.0, v_dip, 0.1, k};
      const double infid = evolution_infidelity(p, lat, 12, 6, 20, kSeed);
      xs.push_back(k);
      ys.push_back(std::max(infid, 1e-300));
    }
    return loglog_slope(xs, ys);
  };
  const double slope0 = sweep(0.0);
  const double slope_dip = sweep(0.5);
  const bool ok0 = slope0 >= -1.3 && slope0 <= -0.7;
  const bool ok_dip = slope_dip >= -1.3 && slope_dip <= -0.7;

  // convergence restored at a deeper cutoff with colder states
  std::vector<double> xs, ys;
  for (int k : {1, 2, 4, 8}) {
    ModelParams p{1.0, 1.0, 0.5, 0.1, k};
    ys.push_back(std::max(evolution_infidelity(p, lat, 16, 3, 20, kSeed), 1e-300));
    xs.push_back(k);
  }
  info = "[info] supplementary: dipole sweep at d=16, occupation<=3, K in {1,2,4,8}: slope " +
         fmt("%.2f", loglog_slope(xs, ys));

  return {ok0 && ok_dip, "trotter scaling at d=12: slope " + fmt("%.2f", slope0) +
                             " (V_dip=0), " + fmt("%.2f", slope_dip) +
                             " (V_dip=0.5) vs [-1.3, -0.7]"};
}

Outcome criterion_7() {
  std::vector<double> taus = {0.2, 0.1, 0.05, 0.025}, ys;
  for (double tau : taus) ys.push_back(commutator_block_residual(tau, 24, 6));
  const double slope = loglog_slope(taus, ys);
  return {slope >= 3.5 && slope <= 4.5,
          "commutator-block residual slope " + fmt("%.2f", slope) + " vs 4 +/- 0.5"};
}

Outcome criterion_8() {
  const int d = 10;
  const Eigen::Index dim = fock_dimension(d, 2);
  Eigen::MatrixXcd total_n = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) total_n(r, r) = double(r / d + r % d);

  std::mt19937_64 rng(kSeed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) / 9007199254740992.0 * 4.0 - 2.0;
  };
  double worst = 0;
  for (int draw = 0; draw < 5; ++draw) {
    ModelParams p{uniform(), uniform(), uniform(), 0.0, 1};
    FockOperator h = exact_hamiltonian(p, build_chain(2), d);
    worst = std::max(worst,
                     (h.matrix * total_n - total_n * h.matrix).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12,
          "number conservation over 5 random draws: max deviation " + fmt("%.1e", worst)};
}

Outcome criterion_9() {
  ModelParams params{0.8, 1.1, 0.4, 0.7, 2};
  TrotterPlan plan = make_plan(params, build_grid(2));
  Circuit step = build_trotter_step(plan);
  const std::string doc = serialize(step);
  Circuit back = deserialize(doc);
  const bool round_trip = back == step && serialize(back) == doc;

  RunConfig config;
  config.lattice = "chain:2";
  config.cutoff = 12;
  config.t = 0.0;
  config.steps = 1;
  config.seed = kSeed;
  std::ostringstream out1, out2, err;
  cmd_verify(config, out1, err);
  cmd_verify(config, out2, err);
  const bool deterministic = out1.str() == out2.str() && !out1.str().empty();

  ModelParams cparams{1.0, 1.0, 0.5, 1.0, 1};
  const bool count_det = compare(make_plan(cparams, build_grid(3))).render_table() ==
                         compare(make_plan(cparams, build_grid(3))).render_table();

  return {round_trip && deterministic && count_det,
          std::string("circuit round-trip ") + (round_trip ? "exact" : "BROKEN") +
              "; reports byte-identical under fixed seed: " +
              ((deterministic && count_det) ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  struct Entry {
    int id;
    double time_limit_s;
    Outcome outcome;
    std::string info;
    double elapsed = 0;
  };
  std::vector<Entry> entries;

  auto run = [&](int id, double limit, auto&& fn) {
    if (only != 0 && only != id) return;
    Entry e{id, limit, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_invocable_v<decltype(fn), std::string&>) {
      e.outcome = fn(e.info);
    } else {
      e.outcome = fn();
    }
    e.elapsed = seconds_since(start);
    entries.push_back(std::move(e));
  };

  run(1, 1.0, criterion_1);
  run(2, 1.0, criterion_2);
  run(3, 5.0, criterion_3);
  run(4, 5.0, criterion_4);
  run(5, 30.0, [](std::string& info) { return criterion_5(info); });
  run(6, 240.0, [](std::string& info) { return criterion_6(info); });
  run(7, 60.0, criterion_7);
  run(8, 5.0, criterion_8);
  run(9, 1.0, criterion_9);

  int failures = 0;
  for (const Entry& e : entries) {
    const bool in_budget = e.elapsed <= e.time_limit_s;
    const bool pass = e.outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", e.id,
                e.outcome.detail.c_str(), e.elapsed, in_budget ? "" : " OVER BUDGET");
    if (!e.info.empty()) std::printf("%s\n", e.info.c_str());
  }
  if (only == 0)
    std::printf("%zu/%zu criteria passed\n", entries.size() - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
