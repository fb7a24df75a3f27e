#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/linalg.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus {

struct LaplaceSpectrumRecord {
  long k = 0;
  long l = 0;
  double eigenvalue = 0.0;
  // Parity bits (k mod 2, l mod 2) of the eigenvector e^(k,l); set for even N.
  std::optional<std::array<int, 2>> sector;
};

// -(Xi^{1/2} - Xi^{-1/2})^{-2} ([X, [X*, .]] + [Y, [Y*, .]]) on vec(M_N).
// Throws DegenerateDeformation when |Xi^{1/2} - Xi^{-1/2}| <= 1e-9.
Matrix laplacian_superop(const Matrix& x, const Matrix& y, cplx xi_half);

// Convenience overload for a derived pair.
Matrix laplacian_superop(const DerivedPair& pair);

// lambda_{k,l} = ([al - bk]^2 + [dk - cl]^2) / [ad - bc]^2 for
// -N/2 < k, l <= N/2, sorted by k then l.  Throws DegenerateDeformation when
// [ad - bc]_q vanishes.
std::vector<LaplaceSpectrumRecord> laplace_spectrum_formula(const IntegerMetric& metric, int n,
                                                            const RootOfUnity& root);

// X = C^2, Y = S^2 on M_N(C), N even: lambda = [k/2]_Q^2 + [l/2]_Q^2 with
// Q = q^4, restricted to the sector (k, l) = (h, j) mod 2.  Throws OddDimension
// for odd N and DegenerateDeformation when Q = 1.
std::vector<LaplaceSpectrumRecord> four_sector_laplace_spectrum(int n, const RootOfUnity& root,
                                                                int h, int j);

// ((al - bk)^2 + (dk - cl)^2) / (ad - bc)^2.  Throws DegenerateMetric.
double commutative_laplace_spectrum(const IntegerMetric& metric, long k, long l);

}  // namespace fuzzytorus
