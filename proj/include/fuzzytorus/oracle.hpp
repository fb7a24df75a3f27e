#pragma once

#include <string>
#include <vector>

#include "fuzzytorus/clockshift.hpp"
#include "fuzzytorus/dirac.hpp"
#include "fuzzytorus/linalg.hpp"

namespace fuzzytorus {

// Ascending eigenvalues of a Hermitian matrix.  Throws NotHermitian when
// ||M - M*|| > 1e-10 * max(1, ||M||).
std::vector<double> hermitian_eigs(const Matrix& m);

struct MultiplicityGroup {
  double value = 0.0;
  int count = 0;
};

// Groups an ascending list: consecutive values join a group when
// |x - group start| <= rel_tol * (1 + |x|).
std::vector<MultiplicityGroup> group_multiplicities(const std::vector<double>& sorted, double rel_tol = 1e-8);

struct SpectrumComparison {
  std::vector<double> computed;
  std::vector<double> reference;
  std::vector<double> gaps;
  std::vector<MultiplicityGroup> multiplicity_table;
  double max_abs_gap = 0.0;
  double tolerance = 0.0;
  bool length_mismatch = false;
  bool pass = false;

  std::string verdict() const;
};

// Sorts both lists and pairs them in order.
SpectrumComparison multiset_match(std::vector<double> computed, std::vector<double> reference, double tol);

// lambda = +-(ad - bc)^{-1} sqrt((dk - cl)^2 + (al - bk)^2) over doubled labels
// -W < tk, tl <= W with (tk, tl) = sigma mod 2, multiplicity 2 per sign and 4
// for the zero mode.  Throws DegenerateMetric.
std::vector<DiracSpectrumRecord> commutative_dirac_spectrum(const IntegerMetric& metric, SpinStructure sigma,
                                                            int window);

}  // namespace fuzzytorus
