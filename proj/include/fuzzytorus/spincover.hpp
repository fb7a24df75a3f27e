#pragma once

#include <array>
#include <vector>

#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/dirac.hpp"
#include "fuzzytorus/oracle.hpp"
#include "fuzzytorus/qroots.hpp"

namespace fuzzytorus {

// Four-fold covering: A = <C^2, S^2> inside M_N(C), N = 4 N'.  The base torus
// has U = C^2, V = S^2 and Q = q^4 with Q^{1/2} = q^2, Q^{1/4} = q; the deck
// group Z2 x Z2 is generated by the adjoint actions of C^{N/2} and S^{N/2}.
struct FuzzyCover {
  int nprime = 0;
  int n = 0;
  RootOfUnity root;
  FuzzyTorus base;
  Matrix deck_c;
  Matrix deck_s;
};

// Throws OrderMismatch unless root.order() = 4 * nprime.
FuzzyCover build_cover(int nprime, const RootOfUnity& root);

// sigma = sigma_c + t with chi = (-1)^t.
struct SpinStructureLabel {
  SpinStructure sigma{0, 0};
  SpinStructure character{0, 0};
  SpinStructure canonical{0, 0};
};

SpinStructureLabel spin_label(const IntegerMetric& metric, SpinStructure chi);

struct SectorTriple {
  SpectralTriple triple;
  SpinStructureLabel label;
  // Isometry from the sector onto C^4 (x) M_N(C).
  Matrix isometry;
  // ||(1 - P) D P|| measured as ||D B - B B^* D B||.
  double leak = 0.0;
};

// Restriction of the triple for X = E^(a,b), Y = E^(c,d) over the base torus
// to C^4 (x) h_chi.  Throws SectorLeak when the leak exceeds 1e-10.
SectorTriple sector_triple(const FuzzyCover& cover, SpinStructure chi, const IntegerMetric& metric);

// Labels (tk, tl) = sigma mod 2 evaluated with the base root Q over the window
// -2N' < tk, tl <= 2N', then compared against diagonalisation of the sector
// triple.  Throws ConjectureViolation when the multisets differ beyond tol.
std::vector<DiracSpectrumRecord> sector_spectrum_conjecture(const FuzzyCover& cover, SpinStructure chi,
                                                            const IntegerMetric& metric, double tol = 1e-9);

struct SectorResult {
  SpinStructureLabel label;
  std::vector<double> eigenvalues;
  std::vector<DiracSpectrumRecord> formula;
  SpectrumComparison conjecture;
  int kernel_dim = 0;
  double leak = 0.0;
};

struct CoverAnalysis {
  std::array<SectorResult, 4> sectors;  // chi = 00, 01, 10, 11
  std::vector<double> full_spectrum;
  SpectrumComparison partition;
};

// All four sectors, computed concurrently.  Kernel dimensions count
// eigenvalues with |lambda| <= kernel_tol.  Conjecture mismatches are
// reported in the comparison, not thrown.
CoverAnalysis analyze_cover(const FuzzyCover& cover, const IntegerMetric& metric, double tol = 1e-9,
                            double kernel_tol = 1e-9);

}  // namespace fuzzytorus
