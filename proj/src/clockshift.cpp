#include "fuzzytorus/clockshift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

std::string IntegerMetric::to_string() const {
  std::ostringstream os;
  os << a << ',' << b << ',' << c << ',' << d;
  return os.str();
}

IntegerMetric hermite_normal_form(const IntegerMetric& metric) {
  if (metric.det() == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  // Columns (a, c) and (b, d); Euclid on the first row by column operations.
  long a = metric.a, b = metric.b, c = metric.c, d = metric.d;
  while (b != 0) {
    const long t = a / b;
    a -= t * b;
    c -= t * d;
    std::swap(a, b);
    std::swap(c, d);
  }
  if (a < 0) {
    a = -a;
    c = -c;
  }
  if (d < 0) d = -d;
  c %= d;
  if (c < 0) c += d;
  return {a, 0, c, d};
}

Matrix clock(int n, const RootOfUnity& root) {
  Matrix out = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) out(k, k) = std::polar(1.0, 2.0 * root.half_angle() * k);
  return out;
}

Matrix shift(int n) {
  Matrix out = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) out((j + 1) % n, j) = 1.0;
  return out;
}

FuzzyTorus clock_shift_torus(const RootOfUnity& root) {
  return {clock(root.order(), root), shift(root.order()), root};
}

FuzzyTorus rescaled_torus(const RootOfUnity& root, cplx alpha_root, cplx beta_root) {
  if (std::abs(std::abs(alpha_root) - 1.0) > 1e-12 || std::abs(std::abs(beta_root) - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "rescaling factors must have unit modulus");
  }
  FuzzyTorus torus = clock_shift_torus(root);
  torus.u *= alpha_root;
  torus.v *= beta_root;
  return torus;
}

double torus_defect(const FuzzyTorus& t) {
  const double relation = distance(t.u * t.v, t.deformation.q() * t.v * t.u);
  return std::max({relation, unitarity_defect(t.u), unitarity_defect(t.v)});
}

Matrix monomial(const FuzzyTorus& torus, long m, long n) {
  const cplx phase = std::polar(1.0, -torus.deformation.half_angle() * static_cast<double>(m * n));
  return phase * unitary_power(torus.u, m) * unitary_power(torus.v, n);
}

DerivedPair derived_pair(const FuzzyTorus& torus, const IntegerMetric& metric) {
  if (metric.det() == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  return {monomial(torus, metric.a, metric.b), monomial(torus, metric.c, metric.d),
          torus.deformation.power(metric.det())};
}

Matrix translation_op(const FuzzyTorus& torus, long j, long n) {
  return unitary_power(torus.v, -j) * unitary_power(torus.u, n);
}

Matrix modular_shear(int n, const RootOfUnity& root) {
  // The kernel q^{(j-k)^2/2} is circulant only if q^{N/2} = +1 for odd N.
  if (n % 2 == 1 && std::abs(std::polar(1.0, root.half_angle() * n) - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidArgument,
                "modular shear for odd N needs the branch with q^{N/2} = +1");
  }
  Matrix out(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      out(j, k) = std::polar(scale, root.half_angle() * static_cast<double>((j - k) * (j - k)));
    }
  }
  return out;
}

Matrix modular_rot(int n, const RootOfUnity& root) {
  Matrix out(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) out(j, k) = std::polar(scale, 2.0 * root.half_angle() * ((j * k) % n));
  }
  return out;
}

}  // namespace fuzzytorus
