#pragma once

#include "fuzzytorus/linalg.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus {

// Row-major vectorisation: entry (i, j) of psi sits at index i * N + j.
Vector vectorize(const Matrix& psi);
Matrix devectorize(const Vector& v, Index n);

// L_X = X (x) 1 and R_X = 1 (x) X^T, so L_X vec(psi) = vec(X psi) and
// R_X vec(psi) = vec(psi X).  Throw ShapeMismatch for non-square input.
Matrix left_superop(const Matrix& x);
Matrix right_superop(const Matrix& x);

enum class Bracket { Commutator, Anticommutator };

// L_X - R_X or L_X + R_X.
Matrix bracket_superop(const Matrix& x, Bracket bracket);

// psi -> M conj(psi).
struct AntilinearOp {
  Matrix matrix;

  Index dim() const { return matrix.rows(); }
  Vector apply(const Vector& v) const;
  // J A J^{-1} for a linear A: M conj(A) M^*, valid for unitary M.
  Matrix conjugate(const Matrix& a) const;
  // J^2 = M conj(M), a linear operator.
  Matrix squared() const;
};

// J = * on M_N(C): the transpose permutation composed with conjugation.
AntilinearOp real_structure(Index n);

// Orthogonal projector onto span{vec(C^k S^l) : (k, l) = (h, j) mod 2}.
// Throws OddDimension for odd n.
Matrix sector_project(int n, int h, int j);

// N^2 x N^2/4 isometry whose columns are vec(C^k S^l) / sqrt(N) over the
// sector; columns ordered by k, then l.  Throws OddDimension for odd n.
Matrix sector_isometry(int n, int h, int j);

}  // namespace fuzzytorus
