#include "fuzzytorus/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

std::vector<double> hermitian_eigs(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "hermitian_eigs needs a square matrix");
  }
  const double asym = distance(m, m.adjoint());
  if (asym > 1e-10 * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << "matrix is not Hermitian: ||M - M*|| = " << asym;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiplicityGroup> group_multiplicities(const std::vector<double>& sorted, double rel_tol) {
  std::vector<MultiplicityGroup> out;
  for (double x : sorted) {
    if (!out.empty() && std::abs(x - out.back().value) <= rel_tol * (1.0 + std::abs(x))) {
      ++out.back().count;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

std::string SpectrumComparison::verdict() const {
  if (length_mismatch) return "LengthMismatch";
  return pass ? "pass" : "fail";
}

SpectrumComparison multiset_match(std::vector<double> computed, std::vector<double> reference, double tol) {
  std::sort(computed.begin(), computed.end());
  std::sort(reference.begin(), reference.end());
  SpectrumComparison out;
  out.tolerance = tol;
  out.length_mismatch = computed.size() != reference.size();
  const std::size_t n = std::min(computed.size(), reference.size());
  out.gaps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = std::abs(computed[i] - reference[i]);
    out.gaps.push_back(gap);
    out.max_abs_gap = std::max(out.max_abs_gap, gap);
  }
  out.multiplicity_table = group_multiplicities(computed);
  out.pass = !out.length_mismatch && out.max_abs_gap <= tol;
  out.computed = std::move(computed);
  out.reference = std::move(reference);
  return out;
}

std::vector<DiracSpectrumRecord> commutative_dirac_spectrum(const IntegerMetric& metric, SpinStructure sigma,
                                                            int window) {
  const long det = metric.det();
  if (det == 0) {
    throw Error(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " has zero determinant");
  }
  const auto [a, b, c, d] = metric;
  std::vector<DiracSpectrumRecord> out;
  for (long tk = -window + 1; tk <= window; ++tk) {
    if (((tk % 2) + 2) % 2 != (sigma[0] & 1)) continue;
    for (long tl = -window + 1; tl <= window; ++tl) {
      if (((tl % 2) + 2) % 2 != (sigma[1] & 1)) continue;
      const double p = 0.5 * static_cast<double>(d * tk - c * tl);
      const double r = 0.5 * static_cast<double>(a * tl - b * tk);
      const double lambda = std::sqrt(p * p + r * r) / std::abs(static_cast<double>(det));
      if (lambda == 0.0) {
        out.push_back({tk, tl, 0, 0.0, 4, sigma});
        continue;
      }
      out.push_back({tk, tl, 1, lambda, 2, sigma});
      out.push_back({tk, tl, -1, -lambda, 2, sigma});
    }
  }
  return out;
}

}  // namespace fuzzytorus
