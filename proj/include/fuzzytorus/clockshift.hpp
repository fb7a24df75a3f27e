#pragma once

#include <array>
#include <string>

#include "fuzzytorus/linalg.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus {

// Integer matrix A = [[a, b], [c, d]] choosing the pair X = E^(a,b), Y = E^(c,d).
struct IntegerMetric {
  long a = 1;
  long b = 0;
  long c = 0;
  long d = 1;

  long det() const { return a * d - b * c; }
  bool is_hermite_normal_form() const { return b == 0 && a > 0 && 0 <= c && c < d; }
  std::string to_string() const;

  static IntegerMetric identity() { return {1, 0, 0, 1}; }

  friend bool operator==(const IntegerMetric&, const IntegerMetric&) = default;
};

// Column reduction A -> A B with B in GL(2, Z) to the form [[a, 0], [c, d]],
// a > 0, 0 <= c < d.  Throws DegenerateMetric for det A = 0.
IntegerMetric hermite_normal_form(const IntegerMetric& metric);

// Unitary generators with U V = Q V U acting on C^dim.  Q carries the branches
// used for normalised monomials (Q^{1/2}) and for Dirac prefactors (Q^{1/4}).
struct FuzzyTorus {
  Matrix u;
  Matrix v;
  RootOfUnity deformation;

  Index dim() const { return u.rows(); }
};

// diag(1, q, ..., q^{n-1}).
Matrix clock(int n, const RootOfUnity& root);

// Cyclic shift with S(j+1, j) = 1, indices mod n.
Matrix shift(int n);

// U = C, V = S of size root.order(), Q = q.
FuzzyTorus clock_shift_torus(const RootOfUnity& root);

// U = alpha^{1/N} C, V = beta^{1/N} S: every irreducible torus is unitarily
// equivalent to one of these.  alpha_root, beta_root are the chosen N-th roots.
FuzzyTorus rescaled_torus(const RootOfUnity& root, cplx alpha_root, cplx beta_root);

// Max of ||UV - QVU||, ||U*U - 1||, ||V*V - 1|| (Frobenius).
double torus_defect(const FuzzyTorus& torus);

// E^(m,n) = Q^{-mn/2} U^m V^n.
Matrix monomial(const FuzzyTorus& torus, long m, long n);

struct DerivedPair {
  Matrix x;
  Matrix y;
  // Xi = Q^{det A}, with Xi^{1/2} = (Q^{1/2})^{det A}, Xi^{1/4} = (Q^{1/4})^{det A}.
  RootOfUnity xi;

  // Xi = 1: Laplace and Dirac prefactors are singular.
  bool degenerate() const { return xi.is_degenerate(); }
};

// X = E^(a,b), Y = E^(c,d).  Throws DegenerateMetric when det A = 0.
DerivedPair derived_pair(const FuzzyTorus& torus, const IntegerMetric& metric);

// P_(j,n) = V^{-j} U^n, so that P U P^{-1} = Q^j U and P V P^{-1} = Q^n V.
Matrix translation_op(const FuzzyTorus& torus, long j, long n);

// (P_A)_{jk} = N^{-1/2} q^{(j-k)^2/2}, implementing C -> q^{-1/2} C S, S -> S.
Matrix modular_shear(int n, const RootOfUnity& root);

// (P_B)_{jk} = N^{-1/2} q^{jk}, implementing C -> S^{-1}, S -> C.
Matrix modular_rot(int n, const RootOfUnity& root);

}  // namespace fuzzytorus
