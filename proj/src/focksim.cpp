#include "bhcv/focksim.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bhcv/errors.hpp"

namespace bhcv {

namespace {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

constexpr Eigen::Index kMaxDimension = 2048;  // keeps dense products desk-scale

Eigen::Index mode_stride(int cutoff, int num_modes, int mode) {
  Eigen::Index s = 1;
  for (int k = mode + 1; k < num_modes; ++k) s *= cutoff;
  return s;
}

// exp(i theta X^power) on one mode, plus Fourier phases; small dense mats.
Matrix position_power(int cutoff, int power) {
  Matrix x = position_operator(cutoff);
  Matrix out = Matrix::Identity(cutoff, cutoff);
  for (int k = 0; k < power; ++k) out = out * x;
  return out;
}

Matrix fourier_matrix(int cutoff, bool dagger) {
  Matrix f = Matrix::Zero(cutoff, cutoff);
  const double sign = dagger ? -1.0 : 1.0;
  for (int m = 0; m < cutoff; ++m) f(m, m) = std::exp(Complex(0, sign * M_PI / 2.0 * m));
  return f;
}

Matrix single_mode_matrix(const Gate& g, int cutoff) {
  switch (g.kind) {
    case GateKind::Fourier: return fourier_matrix(cutoff, false);
    case GateKind::FourierDag: return fourier_matrix(cutoff, true);
    case GateKind::P: return unitary_exp(position_power(cutoff, 2), g.strength);
    case GateKind::V: return unitary_exp(position_power(cutoff, 3), g.strength);
    case GateKind::Q: return unitary_exp(position_power(cutoff, 4), g.strength);
    default: throw std::invalid_argument("not a single-mode gate");
  }
}

// Local two-mode matrix over (first, second) digit ordering.
Matrix two_mode_matrix(const Gate& g, int cutoff) {
  const Eigen::Index d = cutoff, d2 = d * d;
  if (g.kind == GateKind::Swap) {
    Matrix m = Matrix::Zero(d2, d2);
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b) m(b * d + a, a * d + b) = 1.0;
    return m;
  }
  // Cz: exp(i g X (x) X) from the position eigenbasis of one mode.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(position_operator(cutoff).real());
  const Eigen::MatrixXd& r = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::MatrixXd rr(d2, d2);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      rr.block(i * d, j * d, d, d) = r(i, j) * r;
  Eigen::VectorXcd phases(d2);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      phases(a * d + b) = std::exp(Complex(0, g.strength * lam(a) * lam(b)));
  return rr * phases.asDiagonal() * rr.transpose();
}

}  // namespace

Eigen::Index fock_dimension(int cutoff, int num_modes) {
  if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
  if (num_modes < 1) throw std::invalid_argument("num_modes must be >= 1");
  Eigen::Index dim = 1;
  for (int k = 0; k < num_modes; ++k) {
    dim *= cutoff;
    if (dim > kMaxDimension)
      throw ResourceError("Fock dimension " + std::to_string(cutoff) + "^" +
                          std::to_string(num_modes) + " exceeds the desk-scale budget of " +
                          std::to_string(kMaxDimension));
  }
  return dim;
}

Matrix ladder_operator(int cutoff) {
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int m = 0; m + 1 < cutoff; ++m) a(m, m + 1) = std::sqrt(double(m + 1));
  return a;
}

Matrix position_operator(int cutoff) {
  Matrix a = ladder_operator(cutoff);
  return (a + a.adjoint()) / 2.0;
}

Matrix momentum_operator(int cutoff) {
  Matrix a = ladder_operator(cutoff);
  return (a - a.adjoint()) / Complex(0, 2);
}

Matrix number_operator(int cutoff) {
  // Diagonal with exact integer entries (a†a carries 1-ulp sqrt noise).
  Matrix n = Matrix::Zero(cutoff, cutoff);
  for (int m = 0; m < cutoff; ++m) n(m, m) = m;
  return n;
}

Matrix unitary_exp(const Matrix& generator, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((generator + generator.adjoint()) / 2.0);
  Eigen::VectorXcd phases(generator.rows());
  for (Eigen::Index k = 0; k < generator.rows(); ++k)
    phases(k) = std::exp(Complex(0, theta * es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

FockUnitary gate_unitary(const Gate& g, int cutoff, int num_modes) {
  const Eigen::Index dim = fock_dimension(cutoff, num_modes);
  if (g.a < 0 || g.a >= num_modes || (g.arity() == 2 && (g.b < 0 || g.b >= num_modes)))
    throw std::invalid_argument("gate_unitary: mode index out of range");
  Matrix u = Matrix::Identity(dim, dim);
  apply_gate(u, g, cutoff, num_modes);
  return FockUnitary{cutoff, num_modes, std::move(u)};
}

void apply_gate(Matrix& acc, const Gate& g, int cutoff, int num_modes) {
  const Eigen::Index dim = fock_dimension(cutoff, num_modes);
  if (acc.rows() != dim) throw std::invalid_argument("apply_gate: accumulator dimension mismatch");
  const Eigen::Index d = cutoff;
  const Eigen::Index ncols = acc.cols();

  if (g.arity() == 1) {
    if (g.a < 0 || g.a >= num_modes) throw std::invalid_argument("apply_gate: bad mode");
    const Matrix u1 = single_mode_matrix(g, cutoff);
    const Eigen::Index s = mode_stride(cutoff, num_modes, g.a);
    const Eigen::Index npre = dim / (d * s);
    Matrix buf(d, ncols);
    for (Eigen::Index pre = 0; pre < npre; ++pre) {
      for (Eigen::Index post = 0; post < s; ++post) {
        const Eigen::Index base = pre * d * s + post;
        for (Eigen::Index m = 0; m < d; ++m) buf.row(m) = acc.row(base + m * s);
        buf = u1 * buf;
        for (Eigen::Index m = 0; m < d; ++m) acc.row(base + m * s) = buf.row(m);
      }
    }
    return;
  }

  if (g.a < 0 || g.a >= num_modes || g.b < 0 || g.b >= num_modes || g.a == g.b)
    throw std::invalid_argument("apply_gate: bad mode pair");
  // Cz and Swap are symmetric under mode exchange; use sorted strides.
  const int lo = std::min(g.a, g.b), hi = std::max(g.a, g.b);
  const Eigen::Index slo = mode_stride(cutoff, num_modes, lo);
  const Eigen::Index shi = mode_stride(cutoff, num_modes, hi);
  const Matrix u2 = two_mode_matrix(g, cutoff);

  std::vector<Eigen::Index> rest;
  rest.reserve(dim / (d * d));
  for (Eigen::Index r = 0; r < dim; ++r) {
    if ((r / slo) % d == 0 && (r / shi) % d == 0) rest.push_back(r);
  }
  Matrix buf(d * d, ncols);
  for (Eigen::Index base : rest) {
    for (Eigen::Index ma = 0; ma < d; ++ma)
      for (Eigen::Index mb = 0; mb < d; ++mb)
        buf.row(ma * d + mb) = acc.row(base + ma * slo + mb * shi);
    buf = u2 * buf;
    for (Eigen::Index ma = 0; ma < d; ++ma)
      for (Eigen::Index mb = 0; mb < d; ++mb)
        acc.row(base + ma * slo + mb * shi) = buf.row(ma * d + mb);
  }
}

FockUnitary circuit_unitary(const Circuit& c, int cutoff) {
  validate_circuit(c);
  const Eigen::Index dim = fock_dimension(cutoff, c.num_modes);
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates) apply_gate(u, g, cutoff, c.num_modes);
  return FockUnitary{cutoff, c.num_modes, std::move(u)};
}

FockOperator exact_hamiltonian(const ModelParams& params, const Lattice& lattice, int cutoff) {
  const int nm = lattice.num_sites;
  const Eigen::Index dim = fock_dimension(cutoff, nm);
  const Eigen::Index d = cutoff;
  Matrix h = Matrix::Zero(dim, dim);

  const Matrix a = ladder_operator(cutoff);
  const Matrix num = number_operator(cutoff);
  const Matrix onsite = 0.5 * params.U * (num * num - num);
  const Matrix ad = a.adjoint();

  // Embed a product of single-mode factors (identity elsewhere).
  auto add_term = [&](const std::vector<std::pair<int, const Matrix*>>& factors, double scale) {
    for (Eigen::Index row = 0; row < dim; ++row) {
      for (Eigen::Index col = 0; col < dim; ++col) {
        Complex v(scale, 0);
        bool nonzero = true;
        Eigen::Index rr = row, cc = col;
        // Walk digits from least significant (last mode) to first.
        for (int k = nm - 1; k >= 0 && nonzero; --k) {
          const Eigen::Index rm = rr % d, cm = cc % d;
          rr /= d;
          cc /= d;
          const Matrix* f = nullptr;
          for (const auto& [mode, mat] : factors)
            if (mode == k) f = mat;
          if (f) {
            const Complex e = (*f)(rm, cm);
            if (e == Complex(0, 0)) nonzero = false;
            v *= e;
          } else if (rm != cm) {
            nonzero = false;
          }
        }
        if (nonzero) h(row, col) += v;
      }
    }
  };

  for (const auto& [i, j] : lattice.edges) {
    add_term({{i, &ad}, {j, &a}}, -params.J / 2.0);
    add_term({{i, &a}, {j, &ad}}, -params.J / 2.0);
    if (params.V_dip != 0) add_term({{i, &num}, {j, &num}}, params.V_dip);
  }
  if (params.U != 0) {
    for (int site = 0; site < nm; ++site) add_term({{site, &onsite}}, 1.0);
  }
  return FockOperator{cutoff, nm, std::move(h)};
}

FockUnitary exact_evolution(const FockOperator& hamiltonian, double t) {
  const Matrix& h = hamiltonian.matrix;
  const double herm_dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-9)
    throw std::invalid_argument("exact_evolution: Hamiltonian is not Hermitian (deviation " +
                                std::to_string(herm_dev) + ")");
  return FockUnitary{hamiltonian.cutoff, hamiltonian.num_modes, unitary_exp(h, t)};
}

double infidelity(const FockUnitary& a, const FockUnitary& b,
                  const std::vector<Eigen::VectorXcd>& states) {
  if (a.matrix.rows() != b.matrix.rows())
    throw std::invalid_argument("infidelity: dimension mismatch");
  if (states.empty()) throw std::invalid_argument("infidelity: empty state list");
  double sum = 0;
  for (const auto& psi : states) {
    if (psi.size() != a.matrix.rows())
      throw std::invalid_argument("infidelity: state dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-8)
      throw std::invalid_argument("infidelity: state is not normalized");
    const Complex overlap = (a.matrix * psi).dot(b.matrix * psi);
    sum += 1.0 - std::norm(overlap);
  }
  return sum / static_cast<double>(states.size());
}

std::vector<Eigen::VectorXcd> interior_state_ensemble(int cutoff, int num_modes,
                                                      int max_occupation, int count,
                                                      std::uint64_t seed) {
  const Eigen::Index dim = fock_dimension(cutoff, num_modes);
  if (max_occupation < 0 || max_occupation >= cutoff)
    throw std::invalid_argument("interior_state_ensemble: max_occupation out of range");
  // splitmix-free: mt19937_64 with explicit uniform mapping, identical on
  // every platform.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0;
  };
  std::vector<Eigen::VectorXcd> states;
  states.reserve(static_cast<size_t>(count));
  for (int s = 0; s < count; ++s) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      bool interior = true;
      Eigen::Index rest = idx;
      for (int k = 0; k < num_modes; ++k) {
        if (rest % cutoff > max_occupation) interior = false;
        rest /= cutoff;
      }
      if (!interior) continue;
      const double re = uniform();
      const double im = uniform();
      psi(idx) = Complex(re, im);
    }
    psi.normalize();
    states.push_back(std::move(psi));
  }
  return states;
}

namespace {

double interior_maxabs(const Matrix& m, int levels) {
  double v = 0;
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < levels; ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

}  // namespace

std::vector<IdentityCheck> verify_identities(int cutoff) {
  if (cutoff < 8) throw std::invalid_argument("verify_identities: cutoff must be >= 8");
  std::vector<IdentityCheck> out;
  const Matrix x = position_operator(cutoff);
  const Matrix p = momentum_operator(cutoff);

  {
    // [x, p] = i/2 away from the top level.
    Matrix dev = x * p - p * x - Complex(0, 0.5) * Matrix::Identity(cutoff, cutoff);
    out.push_back({"canonical_commutator", cutoff, interior_maxabs(dev, cutoff - 1), 1e-12,
                   false, "[x,p] - i/2, interior levels"});
  }
  {
    // Fourier rotation x -> p is exact entrywise in the truncated basis.
    Matrix f = fourier_matrix(cutoff, false);
    Matrix dev = f * x * f.adjoint() - p;
    out.push_back({"fourier_rotation", cutoff, interior_maxabs(dev, cutoff - 1), 1e-8, false,
                   "F x Fdag - p, interior levels"});
  }
  {
    // Binomial expansion over commuting position matrices; exact at any
    // cutoff, checked on the full two-mode matrix at a fixed small cutoff.
    const int dq = 12;
    const Matrix xq = position_operator(dq);
    const Matrix id = Matrix::Identity(dq, dq);
    const Eigen::Index d2 = static_cast<Eigen::Index>(dq) * dq;
    Matrix xi(d2, d2), xj(d2, d2);
    for (int i = 0; i < dq; ++i)
      for (int j = 0; j < dq; ++j) {
        xi.block(i * dq, j * dq, dq, dq) = xq(i, j) * id;
        xj.block(i * dq, j * dq, dq, dq) = (i == j) ? xq : Matrix::Zero(dq, dq);
      }
    Matrix sum = xi + xj, dif = xi - xj;
    Matrix lhs = 12.0 * (xi * xi) * (xj * xj);
    Matrix rhs = dif * dif * dif * dif + sum * sum * sum * sum - 2.0 * xi * xi * xi * xi -
                 2.0 * xj * xj * xj * xj;
    out.push_back({"quartic_binomial", dq, (lhs - rhs).cwiseAbs().maxCoeff(), 1e-10, false,
                   "12 xi^2 xj^2 vs binomial expansion, full matrix"});
  }
  {
    // Quadratic-quartic commutator relation; exact only together with the
    // scalar -1/6, which exponentiates to a global phase.
    const Matrix x2 = x * x, p2 = p * p;
    const Matrix x3 = x2 * x, p3 = p2 * p;
    const Matrix raw =
        x2 * p2 + p2 * x2 - Complex(0, -4.0 / 9.0) * (x3 * p3 - p3 * x3);
    const int levels = cutoff - 4;
    Complex offset = 0;
    for (int m = 0; m < levels; ++m) offset += raw(m, m);
    offset /= static_cast<double>(levels);
    Matrix corrected = raw + (1.0 / 6.0) * Matrix::Identity(cutoff, cutoff);
    out.push_back({"cubic_commutator_identity", cutoff, interior_maxabs(corrected, levels), 1e-8,
                   false, "x2p2 + p2x2 + (4/9)i[x3,p3] + 1/6, interior levels"});
    out.push_back({"cubic_commutator_offset", cutoff, std::abs(offset - Complex(-1.0 / 6.0, 0)),
                   1e-9, false,
                   "fitted scalar is -1/6: the relation without it holds only up to a global "
                   "phase"});
  }
  for (IdentityCheck& c : out) c.pass = c.deviation <= c.tolerance;
  return out;
}

std::string identity_report_json(const std::vector<IdentityCheck>& checks) {
  nlohmann::json rows = nlohmann::json::array();
  for (const IdentityCheck& c : checks) {
    nlohmann::json row;
    row["check_name"] = c.name;
    row["cutoff"] = c.cutoff;
    row["deviation"] = c.deviation;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    if (!c.note.empty()) row["note"] = c.note;
    rows.push_back(row);
  }
  return rows.dump(2) + "\n";
}

std::string identity_report_table(const std::vector<IdentityCheck>& checks) {
  std::ostringstream os;
  char line[256];
  for (const IdentityCheck& c : checks) {
    std::snprintf(line, sizeof(line), "%-28s d=%-3d dev=%.3e tol=%.1e  %s\n", c.name.c_str(),
                  c.cutoff, c.deviation, c.tolerance, c.pass ? "pass" : "FAIL");
    os << line;
  }
  return os.str();
}

}  // namespace bhcv
