#include "fuzzytorus/laplace.hpp"

#include <cmath>
#include <string>

#include "fuzzytorus/bimodule.hpp"
#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

namespace {

double checked_det_qint(const IntegerMetric& metric, const RootOfUnity& root) {
  const long det = metric.det();
  if (det == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  if (root.is_degenerate() || det % root.order() == 0) {
    throw Error(ErrorKind::DegenerateDeformation,
                "[" + std::to_string(det) + "]_q vanishes for N = " + std::to_string(root.order()));
  }
  return qint(root, det);
}

}  // namespace

Matrix laplacian_superop(const Matrix& x, const Matrix& y, cplx xi_half) {
  const cplx gap = xi_half - 1.0 / xi_half;
  if (std::abs(gap) <= 1e-9) {
    throw Error(ErrorKind::DegenerateDeformation, "Laplacian prefactor is singular (Xi^{1/2} = +-1)");
  }
  const Matrix cx = bracket_superop(x, Bracket::Commutator);
  const Matrix cxs = bracket_superop(x.adjoint(), Bracket::Commutator);
  const Matrix cy = bracket_superop(y, Bracket::Commutator);
  const Matrix cys = bracket_superop(y.adjoint(), Bracket::Commutator);
  return -(cx * cxs + cy * cys) / (gap * gap);
}

Matrix laplacian_superop(const DerivedPair& pair) {
  return laplacian_superop(pair.x, pair.y, pair.xi.q_half());
}

std::vector<LaplaceSpectrumRecord> laplace_spectrum_formula(const IntegerMetric& metric, int n,
                                                            const RootOfUnity& root) {
  if (n < 1) throw Error(ErrorKind::NonPositiveOrder, "N must be positive");
  const double det = checked_det_qint(metric, root);
  const auto [a, b, c, d] = metric;
  std::vector<LaplaceSpectrumRecord> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  const long lo = -((n - 1) / 2);
  const long hi = n / 2;
  for (long k = lo; k <= hi; ++k) {
    for (long l = lo; l <= hi; ++l) {
      const double p = qint(root, a * l - b * k);
      const double r = qint(root, d * k - c * l);
      LaplaceSpectrumRecord rec{k, l, (p * p + r * r) / (det * det), std::nullopt};
      if (n % 2 == 0) rec.sector = std::array<int, 2>{static_cast<int>(std::abs(k) % 2),
                                                      static_cast<int>(std::abs(l) % 2)};
      out.push_back(rec);
    }
  }
  return out;
}

std::vector<LaplaceSpectrumRecord> four_sector_laplace_spectrum(int n, const RootOfUnity& root,
                                                                int h, int j) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::OddDimension, "four-sector split needs even N, got " + std::to_string(n));
  }
  const RootOfUnity big_q = root.power(4);
  if (big_q.is_degenerate()) {
    throw Error(ErrorKind::DegenerateDeformation, "Q = q^4 = 1 for N = " + std::to_string(n));
  }
  std::vector<LaplaceSpectrumRecord> out;
  const long lo = -((n - 1) / 2);
  const long hi = n / 2;
  for (long k = lo; k <= hi; ++k) {
    if (std::abs(k) % 2 != (h & 1)) continue;
    for (long l = lo; l <= hi; ++l) {
      if (std::abs(l) % 2 != (j & 1)) continue;
      const double p = qint(big_q, k, 2);
      const double r = qint(big_q, l, 2);
      out.push_back({k, l, p * p + r * r, std::array<int, 2>{h & 1, j & 1}});
    }
  }
  return out;
}

double commutative_laplace_spectrum(const IntegerMetric& metric, long k, long l) {
  const long det = metric.det();
  if (det == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  const auto [a, b, c, d] = metric;
  const double p = static_cast<double>(a * l - b * k);
  const double r = static_cast<double>(d * k - c * l);
  return (p * p + r * r) / (static_cast<double>(det) * static_cast<double>(det));
}

}  // namespace fuzzytorus
