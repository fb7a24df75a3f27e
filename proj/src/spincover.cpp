#include "fuzzytorus/spincover.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <string>

#include "fuzzytorus/bimodule.hpp"
#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

namespace {

constexpr double kLeakTolerance = 1e-10;

std::string bits(SpinStructure s) { return std::to_string(s[0]) + std::to_string(s[1]); }

}  // namespace

FuzzyCover build_cover(int nprime, const RootOfUnity& root) {
  if (nprime < 1 || root.order() != 4 * nprime) {
    throw Error(ErrorKind::OrderMismatch, "cover with N' = " + std::to_string(nprime) +
                                              " needs a root of order " + std::to_string(4 * nprime) +
                                              ", got " + std::to_string(root.order()));
  }
  const int n = 4 * nprime;
  const Matrix c = clock(n, root);
  const Matrix s = shift(n);
  FuzzyTorus base{c * c, s * s, root.power(4)};
  return {nprime, n, root, std::move(base), unitary_power(c, n / 2), unitary_power(s, n / 2)};
}

SpinStructureLabel spin_label(const IntegerMetric& metric, SpinStructure chi) {
  const SpinStructure sc = canonical_spin_structure(metric);
  const SpinStructure t{chi[0] & 1, chi[1] & 1};
  return {{(sc[0] + t[0]) % 2, (sc[1] + t[1]) % 2}, t, sc};
}

SectorTriple sector_triple(const FuzzyCover& cover, SpinStructure chi, const IntegerMetric& metric) {
  const SpectralTriple full = assemble_triple(cover.base, metric);
  const Matrix b = kron(identity(4), sector_isometry(cover.n, chi[0] & 1, chi[1] & 1));
  const Matrix bs = b.adjoint();

  SectorTriple out;
  out.label = spin_label(metric, chi);
  out.isometry = b;
  const Matrix db = full.d * b;
  out.triple.d = bs * db;
  out.leak = distance(db, b * out.triple.d);
  if (out.leak > kLeakTolerance) {
    std::ostringstream os;
    os << "Dirac operator leaks out of sector " << bits(out.label.character) << ": " << out.leak;
    throw Error(ErrorKind::SectorLeak, os.str());
  }
  out.triple.hilbert_dim = b.cols();
  out.triple.side = full.side;
  out.triple.j = {bs * full.j.matrix * b.conjugate()};
  out.triple.gamma = bs * full.gamma * b;
  out.triple.ko_dim = full.ko_dim;
  out.triple.sigma = out.label.sigma;
  out.triple.algebra.reserve(full.algebra.size());
  for (const Matrix& a : full.algebra) out.triple.algebra.push_back(bs * a * b);
  return out;
}

std::vector<DiracSpectrumRecord> sector_spectrum_conjecture(const FuzzyCover& cover, SpinStructure chi,
                                                            const IntegerMetric& metric, double tol) {
  const SectorTriple sector = sector_triple(cover, chi, metric);
  auto records = dirac_label_spectrum(metric, 2 * cover.nprime, cover.base.deformation, sector.label.sigma);
  const SpectrumComparison cmp = multiset_match(hermitian_eigs(sector.triple.d), expand_spectrum(records), tol);
  if (!cmp.pass) {
    std::ostringstream os;
    os << "sector " << bits(sector.label.character) << " (sigma " << bits(sector.label.sigma)
       << ") disagrees with the label formula: " << cmp.verdict() << ", max gap " << cmp.max_abs_gap;
    throw Error(ErrorKind::ConjectureViolation, os.str());
  }
  return records;
}

CoverAnalysis analyze_cover(const FuzzyCover& cover, const IntegerMetric& metric, double tol,
                            double kernel_tol) {
  auto run_sector = [&](SpinStructure chi) {
    const SectorTriple sector = sector_triple(cover, chi, metric);
    SectorResult r;
    r.label = sector.label;
    r.leak = sector.leak;
    r.eigenvalues = hermitian_eigs(sector.triple.d);
    r.formula = dirac_label_spectrum(metric, 2 * cover.nprime, cover.base.deformation, sector.label.sigma);
    r.conjecture = multiset_match(r.eigenvalues, expand_spectrum(r.formula), tol);
    for (double v : r.eigenvalues) r.kernel_dim += std::abs(v) <= kernel_tol ? 1 : 0;
    return r;
  };
  std::array<std::future<SectorResult>, 4> jobs;
  for (int i = 0; i < 4; ++i) {
    jobs[i] = std::async(std::launch::async, run_sector, SpinStructure{i / 2, i % 2});
  }
  CoverAnalysis out;
  out.full_spectrum = hermitian_eigs(dirac_operator(derived_pair(cover.base, metric)));
  std::vector<double> merged;
  for (int i = 0; i < 4; ++i) {
    out.sectors[i] = jobs[i].get();
    merged.insert(merged.end(), out.sectors[i].eigenvalues.begin(), out.sectors[i].eigenvalues.end());
  }
  out.partition = multiset_match(std::move(merged), out.full_spectrum, tol);
  return out;
}

}  // namespace fuzzytorus
