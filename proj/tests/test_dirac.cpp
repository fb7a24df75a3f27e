#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuzzytorus/dirac.hpp"
#include "fuzzytorus/error.hpp"
#include "fuzzytorus/laplace.hpp"
#include "fuzzytorus/oracle.hpp"
#include "support/reference.hpp"

using namespace fuzzytorus;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

std::vector<IntegerMetric> small_metrics() {
  return {{1, 0, 0, 1}, {1, 0, 0, 2}, {1, 0, 1, 2}, {2, 0, 0, 1}, {2, 0, 1, 1}, {1, 1, 0, 2}, {2, 1, 1, 2}};
}

}  // namespace

TEST_CASE("Clifford module relations") {
  const auto& cm = clifford_module();
  const Matrix one = identity(4);
  for (int i = 0; i < 4; ++i) {
    CHECK(distance(cm.gammas[i], reference::gammas()[i]) == 0.0);
    CHECK(distance(cm.gammas[i].adjoint(), -cm.gammas[i]) == 0.0);
    for (int j = 0; j < 4; ++j) {
      const Matrix anti = cm.gammas[i] * cm.gammas[j] + cm.gammas[j] * cm.gammas[i];
      CHECK(distance(anti, (i == j ? -2.0 : 0.0) * one) < 1e-15);
    }
    CHECK((cm.gammas[i] * cm.chirality + cm.chirality * cm.gammas[i]).norm() < 1e-15);
    CHECK(distance(cm.spinor_real.conjugate(cm.gammas[i]), cm.gammas[i]) < 1e-15);
  }
  CHECK(distance(cm.chirality * cm.chirality, one) < 1e-15);
  CHECK(distance(cm.chirality, cm.chirality.adjoint()) < 1e-15);
  CHECK(distance(cm.spinor_real.squared(), -one) < 1e-15);
  CHECK(distance(cm.spinor_real.conjugate(cm.chirality), cm.chirality) < 1e-15);
}

TEST_CASE("Dirac operator matches the direct application oracle") {
  for (int n : {2, 3, 4}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      for (Branch h : {Branch::Plus, Branch::Minus}) {
        for (Branch f : {Branch::Plus, Branch::Minus}) {
          const auto root = make_root(n, 1, h, f);
          const auto pair = derived_pair(clock_shift_torus(root), a);
          const Matrix d = dirac_operator(pair);
          INFO("N = " << n << ", A = " << a.to_string());
          CHECK(distance(d, reference::dirac_matrix(pair.x, pair.y, pair.xi.q_quarter())) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("Dirac operator symmetries") {
  for (int n : {2, 3, 4, 5}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      const auto pair = derived_pair(clock_shift_torus(default_root(n)), a);
      const Matrix d = dirac_operator(pair);
      const AntilinearOp j = spectral_real_structure(n);
      const Matrix g = spectral_grading(n);
      CHECK(distance(d, d.adjoint()) < 1e-11);
      CHECK((d * g + g * d).norm() < 1e-11);
      CHECK(distance(j.conjugate(d), d) < 1e-11);
      CHECK(distance(j.squared(), -identity(4 * n * n)) < 1e-14);
    }
  }
}

TEST_CASE("E_X and E_Y exchange under the gamma relabelling") {
  const auto root = make_root(5, 2, Branch::Minus, Branch::Plus);
  const auto pair = derived_pair(clock_shift_torus(root), {1, 1, 0, 2});
  const cplx xq = pair.xi.q_quarter();
  const cplx minus = xq - 1.0 / xq;
  const cplx plus = xq + 1.0 / xq;
  const auto& g = clifford_module().gammas;
  const auto parts = dirac_parts(g, pair.x, pair.y, minus, plus);
  const auto swapped = dirac_parts({g[2], g[3], g[0], g[1]}, pair.y, pair.x, -minus, plus);
  CHECK(distance(swapped.ex, parts.ey) < 1e-12);
  CHECK(distance(swapped.ey, parts.ex) < 1e-12);
  const auto split = ex_ey_split(pair.x, pair.y, xq);
  CHECK(distance(split.ex + split.ey, dirac_operator(pair)) < 1e-14);
  CHECK(distance(split.ex, split.ex.adjoint()) < 1e-11);
  CHECK(distance(split.ey, split.ey.adjoint()) < 1e-11);
}

TEST_CASE("closed form of D squared") {
  for (int n : {3, 4, 5}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      for (Branch f : {Branch::Plus, Branch::Minus}) {
        const auto pair = derived_pair(clock_shift_torus(make_root(n, 1, Branch::Plus, f)), a);
        const Matrix d = dirac_operator(pair);
        const Matrix closed = dirac_squared_formula(pair.x, pair.y, pair.xi.q_half(), pair.xi.q_quarter());
        CHECK(distance(d * d, closed) < 1e-10);
      }
    }
  }
}

TEST_CASE("Dirac degeneracy and spin structure errors") {
  CHECK(kind_of([] { dirac_operator(identity(2), identity(2), 1.0); }) == ErrorKind::DegenerateDeformation);
  CHECK(kind_of([] { dirac_operator(identity(2), identity(2), kI); }) == ErrorKind::DegenerateDeformation);
  const auto root = default_root(4);
  CHECK(kind_of([&] { dirac_spectrum_formula({2, 0, 0, 2}, 4, root, {0, 0}); }) ==
        ErrorKind::DegenerateDeformation);
  CHECK(kind_of([&] { dirac_spectrum_formula(IntegerMetric::identity(), 4, root, {0, 0}); }) ==
        ErrorKind::WrongSpinStructure);
  CHECK(kind_of([&] { dirac_spectrum_formula({1, 0, 1, 2}, 3, default_root(3), {1, 1}); }) ==
        ErrorKind::WrongSpinStructure);
  CHECK(kind_of([&] { dirac_label_spectrum({1, 2, 2, 4}, 3, default_root(3), {0, 0}); }) ==
        ErrorKind::DegenerateMetric);
  const auto torus = clock_shift_torus(default_root(3));
  CHECK(kind_of([&] { eigenvector_ansatz(torus, IntegerMetric::identity(), 0, 1); }) == ErrorKind::ParityMismatch);
  CHECK(kind_of([&] { intertwiner_UL(torus, IntegerMetric::identity()); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("canonical spin structure") {
  CHECK(canonical_spin_structure(IntegerMetric::identity()) == SpinStructure{1, 1});
  CHECK(canonical_spin_structure({2, 0, 0, 2}) == SpinStructure{0, 0});
  CHECK(canonical_spin_structure({1, 0, 1, 2}) == SpinStructure{0, 0});
  CHECK(canonical_spin_structure({-1, 2, 0, 1}) == SpinStructure{1, 1});
  CHECK(canonical_spin_structure({2, 0, 1, 2}) == SpinStructure{1, 0});
}

TEST_CASE("Dirac spectrum formula agrees with diagonalisation") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      for (Branch h : {Branch::Plus, Branch::Minus}) {
        for (Branch f : {Branch::Plus, Branch::Minus}) {
          const auto root = make_root(n, 1, h, f);
          const auto pair = derived_pair(clock_shift_torus(root), a);
          const auto recs = dirac_spectrum_formula(a, n, root, canonical_spin_structure(a));
          const auto formula = expand_spectrum(recs);
          REQUIRE(formula.size() == static_cast<std::size_t>(4 * n * n));
          INFO("N = " << n << ", A = " << a.to_string());
          CHECK(multiset_match(hermitian_eigs(dirac_operator(pair)), formula, 1e-9).pass);
        }
      }
    }
  }
}

TEST_CASE("Dirac spectrum against the Jacobi oracle") {
  for (int n : {2, 3}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      const auto root = default_root(n);
      const auto pair = derived_pair(clock_shift_torus(root), a);
      const auto d = reference::dirac_matrix(pair.x, pair.y, pair.xi.q_quarter());
      const auto formula = expand_spectrum(dirac_spectrum_formula(a, n, root, canonical_spin_structure(a)));
      CHECK(reference::max_sorted_gap(reference::hermitian_eigenvalues(d), formula) < 1e-9);
    }
  }
}

TEST_CASE("spectrum is symmetric and has the zero mode of sigma = (0,0)") {
  const auto root = default_root(5);
  const auto recs = dirac_spectrum_formula({1, 0, 1, 2}, 5, root, {0, 0});
  const auto values = expand_spectrum(recs);
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(values[i] == doctest::Approx(-values[values.size() - 1 - i]).epsilon(1e-12));
  }
  int zero = 0;
  for (const auto& r : recs) {
    if (r.sign == 0) {
      ++zero;
      CHECK(r.multiplicity == 4);
      CHECK(r.eigenvalue == 0.0);
    }
  }
  CHECK(zero == 1);
  // Even N: half-integer labels never reach a zero of the quantum number.
  for (const auto& r : dirac_spectrum_formula(IntegerMetric::identity(), 6, default_root(6), {1, 1})) {
    CHECK(r.sign != 0);
    CHECK(r.multiplicity == 2);
    CHECK(r.k() == 0.5 * r.tk);
  }
}

TEST_CASE("N = 2 square torus eigenvalues") {
  const auto root = default_root(2);
  const auto values = expand_spectrum(dirac_spectrum_formula(IntegerMetric::identity(), 2, root, {1, 1}));
  REQUIRE(values.size() == 16);
  for (int i = 0; i < 8; ++i) {
    CHECK(values[i] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(values[8 + i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eigenvector ansatz spans D^2 eigenspaces") {
  for (int n : {3, 4, 5}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      const auto root = default_root(n);
      const auto torus = clock_shift_torus(root);
      const auto pair = derived_pair(torus, a);
      const Matrix d = dirac_operator(pair);
      const Matrix d2 = d * d;
      const auto sc = canonical_spin_structure(a);
      const double det = qint(root, a.det());
      for (long tk = -4 + sc[0]; tk <= 3; tk += 2) {
        for (long tl = -4 + sc[1]; tl <= 3; tl += 2) {
          const double p = qint(root, a.a * tl - a.b * tk, 2);
          const double r = qint(root, a.d * tk - a.c * tl, 2);
          const double lambda2 = (p * p + r * r) / (det * det);
          for (const Vector& v : eigenvector_ansatz(torus, a, tk, tl)) {
            CHECK(std::abs(v.norm() - std::sqrt(static_cast<double>(n))) < 1e-12);
            CHECK((d2 * v - lambda2 * v).norm() < 1e-9 * (1.0 + lambda2));
          }
        }
      }
    }
  }
}

TEST_CASE("intertwiners map D^2 to the Laplacian") {
  for (int n : {3, 5}) {
    for (const IntegerMetric a : {IntegerMetric{1, 0, 1, 2}, IntegerMetric{2, 0, 0, 2}, IntegerMetric{1, 1, 1, 3}}) {
      if (a.det() % n == 0) continue;
      const auto torus = clock_shift_torus(default_root(n));
      const auto pair = derived_pair(torus, a);
      const Matrix d = dirac_operator(pair);
      const Matrix lap = kron(identity(4), laplacian_superop(pair));
      const Matrix ul = intertwiner_UL(torus, a);
      const Matrix ur = intertwiner_UR(torus, a);
      CHECK(unitarity_defect(ul) < 1e-12);
      CHECK(unitarity_defect(ur) < 1e-12);
      CHECK(distance(ul * d * d * ul.adjoint(), lap) < 1e-9);
      CHECK(distance(ur * d * d * ur.adjoint(), lap) < 1e-9);
    }
  }
}

TEST_CASE("translations commute with D, J and the grading") {
  for (int n : {3, 4}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      const auto torus = clock_shift_torus(default_root(n));
      const Matrix d = dirac_operator(derived_pair(torus, a));
      const Matrix g = spectral_grading(n);
      for (long j = 0; j < 2; ++j) {
        for (long m = 0; m < 2; ++m) {
          const Matrix pi = translation_action(torus, a, j, m);
          CHECK(unitarity_defect(pi) < 1e-12);
          CHECK(commutator(pi, d).norm() < 1e-10);
          CHECK(commutator(pi, g).norm() < 1e-12);
          CHECK(distance(spectral_real_structure(n).conjugate(pi), pi) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("spectral triple axioms") {
  for (int n : {2, 3, 4}) {
    for (const auto& a : small_metrics()) {
      if (a.det() % n == 0) continue;
      for (Branch h : {Branch::Plus, Branch::Minus}) {
        const auto triple = assemble_triple(clock_shift_torus(make_root(n, 1, h)), a);
        CHECK(triple.hilbert_dim == 4 * n * n);
        CHECK(triple.ko_dim == 4);
        CHECK(triple.algebra.size() >= 5);
        const auto report = verify_axioms(triple);
        CHECK(report.checks.size() == 9);
        CHECK(report.basis_size == triple.algebra.size());
        for (const auto& c : report.checks) {
          INFO(c.name << " violation " << c.violation);
          CHECK(c.pass);
        }
      }
    }
  }
  const auto big = assemble_triple(clock_shift_torus(default_root(6)), IntegerMetric::identity());
  const auto report = verify_axioms(big);
  CHECK(report.basis_size == 5);
  CHECK(report.all_pass());
}

TEST_CASE("axiom checks detect broken operators") {
  const auto torus = clock_shift_torus(default_root(3));
  auto triple = assemble_triple(torus, IntegerMetric::identity());
  SUBCASE("non-Hermitian D") {
    triple.d(0, 1) += 0.5;
    const auto report = verify_axioms(triple);
    CHECK_FALSE(report.all_pass());
    CHECK_FALSE(report.checks[0].pass);
  }
  SUBCASE("D commuting with the grading") {
    triple.d = triple.gamma;
    const auto report = verify_axioms(triple);
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [](const AxiomCheck& c) { return c.name == "D_Gamma"; });
    REQUIRE(it != report.checks.end());
    CHECK_FALSE(it->pass);
  }
  SUBCASE("mixed left and right multiplication breaks first order") {
    const Matrix mixed = left_superop(torus.u) * right_superop(torus.v);
    triple.d += kron(identity(4), mixed + mixed.adjoint());
    const auto report = verify_axioms(triple);
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [](const AxiomCheck& c) { return c.name == "first_order"; });
    REQUIRE(it != report.checks.end());
    CHECK_FALSE(it->pass);
  }
}

TEST_CASE("fuzzy Dirac eigenvalues approach the commutative ones") {
  for (const auto& a : std::vector<IntegerMetric>{{1, 0, 0, 1}, {1, 0, 1, 2}, {2, 0, 1, 2}}) {
    const auto sc = canonical_spin_structure(a);
    const auto ref = commutative_dirac_spectrum(a, sc, 4);
    double previous = INFINITY;
    for (int n : {101, 401, 1601}) {
      const auto fuzzy = dirac_label_spectrum(a, 4, classical_root(n), sc);
      REQUIRE(fuzzy.size() == ref.size());
      double gap = 0.0;
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(fuzzy[i].tk == ref[i].tk);
        gap = std::max(gap, std::abs(fuzzy[i].eigenvalue - ref[i].eigenvalue));
      }
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 1e-3);
  }
}

TEST_CASE("translation by a full period is a sign") {
  for (int n : {2, 4, 6}) {
    for (const auto& a : small_metrics()) {
      const auto torus = clock_shift_torus(default_root(n));
      const double sign = (a.a + a.c) % 2 == 0 ? 1.0 : -1.0;
      CHECK(distance(translation_action(torus, a, n, 0), sign * identity(4 * n * n)) < 1e-12);
    }
  }
}
