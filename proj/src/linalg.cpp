#include "fuzzytorus/linalg.hpp"

namespace fuzzytorus {

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index p = b.rows();
  const Index q = b.cols();
  Matrix out = Matrix::Zero(a.rows() * p, a.cols() * q);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == cplx{}) continue;
      out.block(i * p, j * q, p, q) = a(i, j) * b;
    }
  }
  return out;
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix unitary_power(const Matrix& m, long exponent) {
  Matrix base = exponent < 0 ? Matrix(m.adjoint()) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Matrix result = identity(m.rows());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

double distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

double unitarity_defect(const Matrix& m) {
  return (m.adjoint() * m - identity(m.cols())).norm();
}

}  // namespace fuzzytorus
