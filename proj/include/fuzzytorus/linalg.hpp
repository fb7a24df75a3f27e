#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fuzzytorus {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr cplx kI{0.0, 1.0};

// Kronecker product A (x) B with the row-major block convention:
// (A (x) B)(i*p + k, j*q + l) = A(i, j) * B(k, l).
Matrix kron(const Matrix& a, const Matrix& b);

Matrix identity(Index n);

// Integer power of a unitary matrix; negative exponents use the adjoint.
Matrix unitary_power(const Matrix& m, long exponent);

// Frobenius norm of a - b.
double distance(const Matrix& a, const Matrix& b);

// ||M* M - 1||_F
double unitarity_defect(const Matrix& m);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace fuzzytorus
