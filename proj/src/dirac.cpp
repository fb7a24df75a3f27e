#include "fuzzytorus/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Sparse>

#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

namespace {

constexpr double kZeroSquared = 1e-18;

Matrix matrix4(std::initializer_list<std::initializer_list<cplx>> rows) {
  Matrix m(4, 4);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CliffordModule build_clifford() {
  const cplx o{0.0, 0.0};
  const cplx p{1.0, 0.0};
  const cplx i = kI;
  CliffordModule cm;
  cm.gammas[0] = matrix4({{o, o, i, o}, {o, o, o, i}, {i, o, o, o}, {o, i, o, o}});
  cm.gammas[1] = matrix4({{o, o, -p, o}, {o, o, o, p}, {p, o, o, o}, {o, -p, o, o}});
  cm.gammas[2] = matrix4({{o, o, o, i}, {o, o, -i, o}, {o, -i, o, o}, {i, o, o, o}});
  cm.gammas[3] = matrix4({{o, o, o, -p}, {o, o, -p, o}, {o, p, o, o}, {p, o, o, o}});
  cm.chirality = cm.gammas[0] * cm.gammas[1] * cm.gammas[2] * cm.gammas[3];
  cm.spinor_real.matrix = matrix4({{o, p, o, o}, {-p, o, o, o}, {o, o, o, -p}, {o, o, p, o}});
  return cm;
}

void require_nondegenerate(cplx minus, cplx plus) {
  if (std::abs(minus) <= 1e-9 || std::abs(plus) <= 1e-9) {
    throw Error(ErrorKind::DegenerateDeformation,
                "Dirac prefactor is singular (Xi^{1/4} in {+-1, +-i})");
  }
}

Matrix com(const Matrix& x) { return bracket_superop(x, Bracket::Commutator); }
Matrix acom(const Matrix& x) { return bracket_superop(x, Bracket::Anticommutator); }

void require_canonical_parity(const IntegerMetric& metric, long tk, long tl) {
  const SpinStructure sc = canonical_spin_structure(metric);
  if (((tk % 2) + 2) % 2 != sc[0] || ((tl % 2) + 2) % 2 != sc[1]) {
    throw Error(ErrorKind::ParityMismatch, "doubled label (" + std::to_string(tk) + "," + std::to_string(tl) +
                                               ") does not have parity sigma_c of " + metric.to_string());
  }
}

// Smallest p with M^p = 1, searched up to limit.
long unitary_period(const Matrix& m, long limit) {
  Matrix power = m;
  for (long p = 1; p <= limit; ++p) {
    if (distance(power, identity(m.rows())) < 1e-9) return p;
    power = power * m;
  }
  return limit;
}

}  // namespace

SpinStructure canonical_spin_structure(const IntegerMetric& metric) {
  auto bit = [](long v) { return static_cast<int>(((v % 2) + 2) % 2); };
  return {bit(metric.a + metric.c), bit(metric.b + metric.d)};
}

const CliffordModule& clifford_module() {
  static const CliffordModule module = build_clifford();
  return module;
}

AntilinearOp spectral_real_structure(Index n) {
  return {kron(clifford_module().spinor_real.matrix, real_structure(n).matrix)};
}

Matrix spectral_grading(Index n) { return kron(clifford_module().chirality, identity(n * n)); }

DiracParts dirac_parts(const std::array<Matrix, 4>& g, const Matrix& x, const Matrix& y, cplx minus,
                       cplx plus) {
  const Matrix xs = x.adjoint();
  const Matrix ys = y.adjoint();
  const Matrix k1 = -(x + xs) / 4.0;
  const Matrix k2 = -kI * (xs - x) / 4.0;
  const Matrix k3 = (y + ys) / 4.0;
  const Matrix k4 = kI * (ys - y) / 4.0;
  DiracParts parts;
  parts.ex = (kron(g[0], com(k1)) + kron(g[1], com(k2))) / minus +
             (kron(g[1] * g[2] * g[3], acom(k1)) - kron(g[0] * g[2] * g[3], acom(k2))) / plus;
  parts.ey = (kron(g[2], com(k3)) + kron(g[3], com(k4))) / minus +
             (kron(g[0] * g[1] * g[2], acom(k4)) - kron(g[0] * g[1] * g[3], acom(k3))) / plus;
  return parts;
}

DiracParts ex_ey_split(const Matrix& x, const Matrix& y, cplx xi_quarter) {
  const cplx minus = xi_quarter - 1.0 / xi_quarter;
  const cplx plus = xi_quarter + 1.0 / xi_quarter;
  require_nondegenerate(minus, plus);
  return dirac_parts(clifford_module().gammas, x, y, minus, plus);
}

Matrix dirac_operator(const Matrix& x, const Matrix& y, cplx xi_quarter) {
  DiracParts parts = ex_ey_split(x, y, xi_quarter);
  return parts.ex + parts.ey;
}

Matrix dirac_operator(const DerivedPair& pair) {
  return dirac_operator(pair.x, pair.y, pair.xi.q_quarter());
}

Matrix dirac_squared_formula(const Matrix& x, const Matrix& y, cplx xi_half, cplx xi_quarter) {
  const cplx minus = xi_quarter - 1.0 / xi_quarter;
  const cplx plus = xi_quarter + 1.0 / xi_quarter;
  const cplx half_gap = xi_half - 1.0 / xi_half;
  require_nondegenerate(minus, plus);
  const auto& g = clifford_module().gammas;
  const Matrix one = identity(4);
  const Matrix xs = x.adjoint();
  const Matrix ys = y.adjoint();
  const Matrix double_com = com(x) * com(xs) + com(y) * com(ys);
  const Matrix double_acom = acom(x) * acom(xs) + acom(y) * acom(ys);
  const Matrix cross = kron(g[0] * g[1], acom(y) * com(ys)) - kron(g[2] * g[3], acom(x) * com(xs));
  return -kron(one, double_com) / (4.0 * minus * minus) + kI * cross / (2.0 * half_gap) +
         kron(one, double_acom) / (4.0 * plus * plus);
}

std::vector<DiracSpectrumRecord> dirac_label_spectrum(const IntegerMetric& metric, int window,
                                                      const RootOfUnity& root, SpinStructure sigma) {
  const long det = metric.det();
  if (det == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  if (root.is_degenerate() || det % root.order() == 0) {
    throw Error(ErrorKind::DegenerateDeformation,
                "Xi = q^" + std::to_string(det) + " = 1 for N = " + std::to_string(root.order()));
  }
  const double denom = qint(root, det);
  const auto [a, b, c, d] = metric;
  std::vector<DiracSpectrumRecord> out;
  for (long tk = -window + 1; tk <= window; ++tk) {
    if (((tk % 2) + 2) % 2 != (sigma[0] & 1)) continue;
    for (long tl = -window + 1; tl <= window; ++tl) {
      if (((tl % 2) + 2) % 2 != (sigma[1] & 1)) continue;
      const double p = qint(root, a * tl - b * tk, 2);
      const double r = qint(root, d * tk - c * tl, 2);
      const double squared = (p * p + r * r) / (denom * denom);
      if (squared < kZeroSquared) {
        out.push_back({tk, tl, 0, 0.0, 4, sigma});
        continue;
      }
      const double lambda = std::sqrt(squared);
      out.push_back({tk, tl, 1, lambda, 2, sigma});
      out.push_back({tk, tl, -1, -lambda, 2, sigma});
    }
  }
  return out;
}

std::vector<DiracSpectrumRecord> dirac_spectrum_formula(const IntegerMetric& metric, int n,
                                                        const RootOfUnity& root, SpinStructure sigma) {
  const SpinStructure sc = canonical_spin_structure(metric);
  if ((sigma[0] & 1) != sc[0] || (sigma[1] & 1) != sc[1]) {
    throw Error(ErrorKind::WrongSpinStructure,
                "sigma = (" + std::to_string(sigma[0]) + "," + std::to_string(sigma[1]) +
                    ") differs from sigma_c = (" + std::to_string(sc[0]) + "," + std::to_string(sc[1]) +
                    "); other spin structures need the covering construction");
  }
  return dirac_label_spectrum(metric, n, root, sc);
}

std::vector<double> expand_spectrum(const std::vector<DiracSpectrumRecord>& records) {
  std::vector<double> out;
  for (const auto& r : records) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.eigenvalue);
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Vector, 4> eigenvector_ansatz(const FuzzyTorus& torus, const IntegerMetric& metric, long tk,
                                         long tl) {
  require_canonical_parity(metric, tk, tl);
  const auto [a, b, c, d] = metric;
  const std::array<std::array<long, 2>, 4> exponents{{
      {(tk + a + c) / 2, (tl + b + d) / 2},
      {(tk - a - c) / 2, (tl - b - d) / 2},
      {(tk + c - a) / 2, (tl + d - b) / 2},
      {(tk + a - c) / 2, (tl + b - d) / 2},
  }};
  const Index n2 = torus.dim() * torus.dim();
  std::array<Vector, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = Vector::Zero(4 * n2);
    out[i].segment(i * n2, n2) = vectorize(monomial(torus, exponents[i][0], exponents[i][1]));
  }
  return out;
}

Matrix intertwiner_UL(const FuzzyTorus& torus, const IntegerMetric& metric) {
  const SpinStructure sc = canonical_spin_structure(metric);
  if (sc[0] != 0 || sc[1] != 0) {
    throw Error(ErrorKind::ParityMismatch, "intertwiner needs sigma_c = (0,0); metric " + metric.to_string() +
                                               " has (" + std::to_string(sc[0]) + "," +
                                               std::to_string(sc[1]) + ")");
  }
  const auto [a, b, c, d] = metric;
  const Matrix t = monomial(torus, (a + c) / 2, (b + d) / 2);
  const Matrix h = monomial(torus, (c - a) / 2, (d - b) / 2);
  const auto& cm = clifford_module();
  const Matrix g12 = cm.gammas[0] * cm.gammas[1];
  const Matrix g34 = cm.gammas[2] * cm.gammas[3];
  const Matrix one = identity(4);
  const Matrix lt = left_superop(t);
  const Matrix lts = left_superop(t.adjoint());
  const Matrix lh = left_superop(h);
  const Matrix lhs = left_superop(h.adjoint());
  return 0.25 * (kI * kron(g12 - g34, lhs - lh) - kI * kron(g12 + g34, lts - lt) +
                 kron(one + cm.chirality, lh + lhs) + kron(one - cm.chirality, lt + lts));
}

Matrix intertwiner_UR(const FuzzyTorus& torus, const IntegerMetric& metric) {
  return spectral_real_structure(torus.dim()).conjugate(intertwiner_UL(torus, metric));
}

Matrix translation_action(const FuzzyTorus& torus, const IntegerMetric& metric, long j, long n) {
  const int order = torus.deformation.order();
  const double unit = 2.0 * std::numbers::pi * torus.deformation.numerator() / order;
  const double theta = unit * static_cast<double>(j);
  const double phi = unit * static_cast<double>(n);
  const double x = metric.a * theta + metric.b * phi;
  const double y = metric.c * theta + metric.d * phi;
  const auto& g = clifford_module().gammas;
  const Matrix one = identity(4);
  const Matrix w = (std::cos(x / 2) * one - std::sin(x / 2) * g[0] * g[1]) *
                   (std::cos(y / 2) * one - std::sin(y / 2) * g[2] * g[3]);
  const Matrix p = translation_op(torus, j, n);
  return kron(w, left_superop(p) * right_superop(p.adjoint()));
}

SpectralTriple assemble_triple(const FuzzyTorus& torus, const IntegerMetric& metric) {
  const DerivedPair pair = derived_pair(torus, metric);
  const Index n = torus.dim();
  SpectralTriple triple;
  triple.side = static_cast<int>(n);
  triple.hilbert_dim = 4 * n * n;
  triple.d = dirac_operator(pair);
  triple.j = spectral_real_structure(n);
  triple.gamma = spectral_grading(n);
  triple.sigma = canonical_spin_structure(metric);

  const Matrix one = identity(4);
  auto act = [&](const Matrix& a) { return kron(one, left_superop(a)); };
  triple.algebra = {act(torus.u), act(torus.v), act(torus.u.adjoint()), act(torus.v.adjoint()),
                    act(torus.u * torus.v)};
  const long period =
      std::max(unitary_period(torus.u, 2 * n), unitary_period(torus.v, 2 * n));
  for (long m = 0; m < period; ++m) {
    for (long k = 0; k < period; ++k) {
      if ((m == 1 && k == 0) || (m == 0 && k == 1) || (m == 1 && k == 1)) continue;
      triple.algebra.push_back(act(monomial(torus, m, k)));
    }
  }
  return triple;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

AxiomReport verify_axioms(const SpectralTriple& t, int basis_limit, double rel_tol) {
  const Index dim = t.hilbert_dim;
  const Matrix one = identity(dim);
  const Matrix& m = t.j.matrix;
  const Matrix& d = t.d;
  const Matrix& g = t.gamma;

  std::size_t count = t.algebra.size();
  if (basis_limit > 0) {
    count = std::min(count, static_cast<std::size_t>(basis_limit));
  } else if (t.side > 4) {
    count = std::min<std::size_t>(count, 5);
  }

  AxiomReport report;
  report.tolerance = rel_tol * static_cast<double>(dim);
  report.basis_size = count;
  auto add = [&](const char* name, double violation) {
    report.checks.push_back({name, violation, violation <= report.tolerance});
  };

  add("hermitian_D", distance(d, d.adjoint()));
  add("J_antiunitary", distance(m.adjoint() * m, one));
  add("J_squared", (t.j.squared() + one).norm());
  add("J_Gamma", distance(m * g.conjugate(), g * m));
  add("D_J", distance(m * d.conjugate(), d * m));
  add("D_Gamma", (d * g + g * d).norm());

  // Algebra elements and J are monomial matrices; sparse products keep the
  // commutator checks quadratic in the Hilbert space dimension.
  using Sparse = Eigen::SparseMatrix<cplx>;
  const Sparse ms = m.sparseView(cplx(0.0), 0.0);
  const Sparse ms_adj = Sparse(ms.adjoint());
  const Sparse gs = g.sparseView(cplx(0.0), 0.0);
  std::vector<Sparse> left(count);
  std::vector<Sparse> right(count);
  std::vector<Sparse> right_star(count);
  for (std::size_t i = 0; i < count; ++i) {
    left[i] = t.algebra[i].sparseView(cplx(0.0), 0.0);
    const Sparse conj = Sparse(left[i].conjugate());
    const Sparse conj_adj = Sparse(left[i].transpose());
    right[i] = ms * conj * ms_adj;
    right_star[i] = ms * conj_adj * ms_adj;
  }
  double zeroth = 0.0;
  double first = 0.0;
  double grading = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Sparse& a = left[i];
    grading = std::max(grading, Sparse(gs * a - a * gs).norm());
    const Matrix da = d * a - a * d;
    for (std::size_t k = 0; k < count; ++k) {
      zeroth = std::max(zeroth, Sparse(a * right_star[k] - right_star[k] * a).norm());
      const Matrix second = da * right[k] - right[k] * da;
      first = std::max(first, second.norm());
    }
  }
  add("zeroth_order", zeroth);
  add("first_order", first);
  add("Gamma_algebra", grading);
  return report;
}

}  // namespace fuzzytorus
