#pragma once

#include "fuzzytorus/linalg.hpp"

namespace fuzzytorus {

// Sign selecting one of the two square roots.
enum class Branch : int { Plus = 1, Minus = -1 };

inline Branch flip(Branch b) { return b == Branch::Plus ? Branch::Minus : Branch::Plus; }

// A primitive root of unity q = exp(2 pi i K / N) together with an explicit
// choice of q^{1/2} and q^{1/4}.
//
// The branches are stored as phase angles: q^{1/2} = exp(i half_angle) and
// q^{1/4} = exp(i quarter_angle), with 2 * quarter_angle = half_angle mod 2 pi.
// The eighth root used by quantum numbers with denominator 4 is
// exp(i quarter_angle / 2).  Integer powers of a root (the deformation
// parameter of a derived pair, or the base parameter of a covering) carry the
// powered branches, so every downstream operator sees one consistent choice.
class RootOfUnity {
 public:
  // Order N and numerator K of the root.  K is reduced into [0, N).
  int order() const { return order_; }
  int numerator() const { return numerator_; }

  double half_angle() const { return half_angle_; }
  double quarter_angle() const { return quarter_angle_; }

  cplx q() const;
  cplx q_half() const;
  cplx q_quarter() const;
  cplx q_eighth() const;

  // Branch of q^{1/2} relative to exp(i pi K / N), and of q^{1/4} relative to
  // the square root of q^{1/2} with halved angle.
  Branch half_branch() const;
  Branch quarter_branch() const;

  // q = 1; every quantum number and every Laplace or Dirac prefactor is
  // singular for such a root.
  bool is_degenerate() const { return order_ == 1; }

  // q^p with branches (q^{1/2})^p, (q^{1/4})^p.
  RootOfUnity power(long p) const;

  friend RootOfUnity make_root(int n, int k, Branch half, Branch quarter);

 private:
  RootOfUnity(int order, int numerator, double half_angle, double quarter_angle)
      : order_(order), numerator_(numerator), half_angle_(half_angle), quarter_angle_(quarter_angle) {}

  int order_;
  int numerator_;
  double half_angle_;
  double quarter_angle_;
};

// Throws NonPositiveOrder for n < 1 and NotCoprime when gcd(k, n) != 1.
RootOfUnity make_root(int n, int k, Branch half, Branch quarter = Branch::Plus);

// The conventional root for order n: half branch Plus for even n, and for odd
// n the branch with q^{n/2} = +1.
RootOfUnity default_root(int n, int k = 1);

// A root whose q^{1/2} tends to 1 as n grows: K = 2 with the plus branch for
// odd n, K = 1 with the plus branch for even n (K = 2 is not coprime there).
RootOfUnity classical_root(int n);

// Quantum number [num/den]_q for den in {1, 2, 4}:
//   (q^{num/(2 den)} - q^{-num/(2 den)}) / (q^{1/2} - q^{-1/2}).
// Throws DegenerateRoot when q = 1 and NonRealResult when the imaginary
// residue exceeds 1e-12 (relative to max(1, |value|)).
double qint(const RootOfUnity& root, long num, int den = 1);

}  // namespace fuzzytorus
