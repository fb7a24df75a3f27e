#pragma once

#include <array>
#include <string>
#include <vector>

#include "fuzzytorus/bimodule.hpp"
#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/linalg.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus {

// Spin structure bits (sigma_1, sigma_2).
using SpinStructure = std::array<int, 2>;

// sigma_c = (a + c mod 2, b + d mod 2).
SpinStructure canonical_spin_structure(const IntegerMetric& metric);

// Euclidean gamma matrices on C^4 with gamma^i gamma^j + gamma^j gamma^i =
// -2 delta^{ij}, chirality gamma = gamma^1 gamma^2 gamma^3 gamma^4 and the
// spinor real structure j(v) = (conj v2, -conj v1, -conj v4, conj v3).
struct CliffordModule {
  std::array<Matrix, 4> gammas;
  Matrix chirality;
  AntilinearOp spinor_real;
};

const CliffordModule& clifford_module();

// Real structure j (x) * on C^4 (x) M_N(C).
AntilinearOp spectral_real_structure(Index n);

// Chirality gamma (x) 1 on C^4 (x) M_N(C).
Matrix spectral_grading(Index n);

struct DiracParts {
  Matrix ex;
  Matrix ey;
};

// E_X, E_Y for explicit gamma matrices and prefactors
//   E_X = (g1 (x) [K1, .] + g2 (x) [K2, .]) / minus
//       + (g2 g3 g4 (x) {K1, .} - g1 g3 g4 (x) {K2, .}) / plus
// and E_Y likewise with g3, g4, K3, K4.  No degeneracy checks: this is the raw
// assembly used by dirac_operator and by coefficient perturbation studies.
DiracParts dirac_parts(const std::array<Matrix, 4>& gammas, const Matrix& x, const Matrix& y,
                       cplx minus, cplx plus);

// D_{X,Y} on C^4 (x) M_N(C) with prefactors Xi^{1/4} -+ Xi^{-1/4}.  Throws
// DegenerateDeformation when either prefactor is below 1e-9 in modulus.
Matrix dirac_operator(const Matrix& x, const Matrix& y, cplx xi_quarter);
Matrix dirac_operator(const DerivedPair& pair);

DiracParts ex_ey_split(const Matrix& x, const Matrix& y, cplx xi_quarter);

// Closed form of D^2: double commutator, g1 g2 / g3 g4 cross terms and double
// anticommutator.
Matrix dirac_squared_formula(const Matrix& x, const Matrix& y, cplx xi_half, cplx xi_quarter);

// One spectral label with doubled coordinates tk = 2k, tl = 2l.
struct DiracSpectrumRecord {
  long tk = 0;
  long tl = 0;
  int sign = 0;  // +1, -1, or 0 for a zero mode
  double eigenvalue = 0.0;
  int multiplicity = 0;
  SpinStructure sigma{0, 0};

  double k() const { return 0.5 * static_cast<double>(tk); }
  double l() const { return 0.5 * static_cast<double>(tl); }
};

// lambda^2 = ([(a tl - b tk)/2]^2 + [(d tk - c tl)/2]^2) / [ad - bc]^2 over
// doubled labels -P < tk, tl <= P with (tk, tl) = sigma mod 2.  Each nonzero
// label gives +-lambda with multiplicity 2; a zero label gives one record with
// sign 0 and multiplicity 4.  No spin-structure check.
std::vector<DiracSpectrumRecord> dirac_label_spectrum(const IntegerMetric& metric, int window,
                                                      const RootOfUnity& root, SpinStructure sigma);

// Spectrum of D_{X,Y} for the clock/shift torus of order N.  Throws
// WrongSpinStructure unless sigma = sigma_c, DegenerateDeformation when
// N divides ad - bc.
std::vector<DiracSpectrumRecord> dirac_spectrum_formula(const IntegerMetric& metric, int n,
                                                        const RootOfUnity& root, SpinStructure sigma);

// Expands records into a sorted eigenvalue list with multiplicities.
std::vector<double> expand_spectrum(const std::vector<DiracSpectrumRecord>& records);

// Four D^2 eigenvectors for the doubled label (tk, tl): e_i (x) vec(E^(m_i, n_i))
// with (m, n) = ((tk + a + c)/2, (tl + b + d)/2), ((tk - a - c)/2, (tl - b - d)/2),
// ((tk + c - a)/2, (tl + d - b)/2), ((tk + a - c)/2, (tl + b - d)/2).
// Throws ParityMismatch unless (tk, tl) = sigma_c mod 2.
std::array<Vector, 4> eigenvector_ansatz(const FuzzyTorus& torus, const IntegerMetric& metric, long tk,
                                         long tl);

// Unitary U_L with U_L D^2 U_L^* = 1 (x) Delta_{X,Y}, built from T =
// E^((a+c)/2, (b+d)/2) and H = E^((c-a)/2, (d-b)/2).  U_R = J U_L J^{-1}.
// Throw ParityMismatch unless sigma_c = (0, 0).
Matrix intertwiner_UL(const FuzzyTorus& torus, const IntegerMetric& metric);
Matrix intertwiner_UR(const FuzzyTorus& torus, const IntegerMetric& metric);

// Pi_(j,n) = W (x) Ad(P_(j,n)) with Theta = 2 pi K j / N, Phi = 2 pi K n / N and
// W = exp(-(g1 g2 (a Theta + b Phi) + g3 g4 (c Theta + d Phi)) / 2).
Matrix translation_action(const FuzzyTorus& torus, const IntegerMetric& metric, long j, long n);

struct SpectralTriple {
  Index hilbert_dim = 0;
  // Algebra elements as operators on the Hilbert space: U, V, U*, V*, UV, then
  // the remaining monomials E^(m,n) over one period.
  std::vector<Matrix> algebra;
  Matrix d;
  AntilinearOp j;
  Matrix gamma;
  int ko_dim = 4;
  SpinStructure sigma{0, 0};
  // Side length N of the underlying matrix algebra.
  int side = 0;
};

// Full triple on C^4 (x) M_N(C) for X = E^(a,b), Y = E^(c,d) over the torus.
SpectralTriple assemble_triple(const FuzzyTorus& torus, const IntegerMetric& metric);

struct AxiomCheck {
  std::string name;
  double violation = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  double tolerance = 0.0;
  std::size_t basis_size = 0;

  bool all_pass() const;
};

// Nine checks: hermitian_D, J_antiunitary, J_squared, J_Gamma, D_J, D_Gamma,
// zeroth_order, first_order, Gamma_algebra.  A check passes when its
// Frobenius violation is at most rel_tol * hilbert_dim.  basis_limit <= 0
// selects the full algebra list for N <= 4 and the first five elements
// otherwise.
AxiomReport verify_axioms(const SpectralTriple& triple, int basis_limit = 0, double rel_tol = 1e-10);

}  // namespace fuzzytorus
