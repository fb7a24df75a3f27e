#include "fuzzytorus/bimodule.hpp"

#include <cmath>
#include <string>

#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

namespace {

void require_square(const Matrix& x, const char* what) {
  if (x.rows() != x.cols() || x.rows() == 0) {
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + " needs a non-empty square matrix, got " +
                                              std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

void require_even(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::OddDimension, "sector decomposition needs even N, got " + std::to_string(n));
  }
}

}  // namespace

Vector vectorize(const Matrix& psi) {
  const Index n = psi.rows();
  Vector v(n * psi.cols());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < psi.cols(); ++j) v(i * psi.cols() + j) = psi(i, j);
  }
  return v;
}

Matrix devectorize(const Vector& v, Index n) {
  if (n <= 0 || v.size() != n * n) {
    throw Error(ErrorKind::ShapeMismatch, "vector of length " + std::to_string(v.size()) +
                                              " is not a square of " + std::to_string(n));
  }
  Matrix psi(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) psi(i, j) = v(i * n + j);
  }
  return psi;
}

Matrix left_superop(const Matrix& x) {
  require_square(x, "left_superop");
  return kron(x, identity(x.rows()));
}

Matrix right_superop(const Matrix& x) {
  require_square(x, "right_superop");
  return kron(identity(x.rows()), x.transpose());
}

Matrix bracket_superop(const Matrix& x, Bracket bracket) {
  return bracket == Bracket::Commutator ? Matrix(left_superop(x) - right_superop(x))
                                        : Matrix(left_superop(x) + right_superop(x));
}

Vector AntilinearOp::apply(const Vector& v) const { return matrix * v.conjugate(); }

Matrix AntilinearOp::conjugate(const Matrix& a) const { return matrix * a.conjugate() * matrix.adjoint(); }

Matrix AntilinearOp::squared() const { return matrix * matrix.conjugate(); }

AntilinearOp real_structure(Index n) {
  Matrix perm = Matrix::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) perm(j * n + i, i * n + j) = 1.0;
  }
  return {perm};
}

Matrix sector_isometry(int n, int h, int j) {
  require_even(n);
  // The span does not depend on the root; use q = exp(2 pi i / N).
  const RootOfUnity root = make_root(n, 1, Branch::Plus);
  const Matrix c = clock(n, root);
  const Matrix s = shift(n);
  Matrix out(static_cast<Index>(n) * n, static_cast<Index>(n) * n / 4);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Index col = 0;
  Matrix ck = identity(n);
  for (int k = 0; k < n; ++k, ck = ck * c) {
    if (k % 2 != (h & 1)) continue;
    Matrix term = ck;
    for (int l = 0; l < n; ++l, term = term * s) {
      if (l % 2 != (j & 1)) continue;
      out.col(col++) = scale * vectorize(term);
    }
  }
  return out;
}

Matrix sector_project(int n, int h, int j) {
  const Matrix iso = sector_isometry(n, h, j);
  return iso * iso.adjoint();
}

}  // namespace fuzzytorus
