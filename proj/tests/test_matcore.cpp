#include <doctest.h>

#include <cmath>
#include <numbers>

#include "blaschke_lab/config.hpp"
#include "blaschke_lab/matcore.hpp"
#include "test_support.hpp"

using namespace blaschke_lab;
using testing_support::random_hermitian;
using testing_support::random_matrix;
using testing_support::random_unit_vector;
using testing_support::random_unitary;

namespace {

double residual(const CMatrix& h, const EigPair& ep) {
  const auto hv = h.apply(ep.vector);
  double s = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) s += std::norm(hv[i] - ep.value * ep.vector[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("matcore") {
  TEST_CASE("diagonal eigenproblem") {
    const cplx d[] = {1.0, 2.0, 3.0};
    const auto ep = herm_eig_max(CMatrix::diagonal(d));
    CHECK(ep.value == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(ep.vector[2]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(ep.vector[0]) < 1e-14);
  }

  TEST_CASE("symmetric 2x2") {
    const CMatrix h{{0.0, 0.5}, {0.5, 0.0}};
    const auto ep = herm_eig_max(h);
    CHECK(ep.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(ep.vector[0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(ep.vector[0] - ep.vector[1]) < 1e-12);
  }

  TEST_CASE("real part of J9") {
    const CMatrix j = CMatrix::jordan(9);
    const CMatrix h = (j + j.adjoint()) * cplx(0.5);
    const auto ep = herm_eig_max(h);
    CHECK(std::abs(ep.value - std::cos(std::numbers::pi / 10.0)) < 1e-12);
    CHECK(residual(h, ep) < 1e-10);
  }

  TEST_CASE("non-Hermitian input is rejected with the entry") {
    CMatrix h{{1.0, 0.5}, {0.2, 1.0}};
    try {
      herm_eig_max(h);
      FAIL("expected NotHermitianError");
    } catch (const NotHermitianError& e) {
      CHECK(((e.row == 0 && e.col == 1) || (e.row == 1 && e.col == 0)));
      CHECK(e.defect == doctest::Approx(0.3));
    }
  }

  TEST_CASE("Rayleigh bound and residual on random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 7;
      const CMatrix h = random_hermitian(rng, n);
      const auto ep = herm_eig_max(h);
      CHECK(vec_norm(ep.vector) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(residual(h, ep) <= 1e-10 * std::max(1.0, h.frobenius()));
      for (int k = 0; k < 1000; ++k) {
        const auto x = random_unit_vector(rng, n);
        REQUIRE(rayleigh(h, x).real() <= ep.value + 1e-10);
      }
    }
  }

  TEST_CASE("warm start agrees with a cold start") {
    std::mt19937_64 rng(12);
    const CMatrix a = random_matrix(rng, 6);
    CMatrix basis = CMatrix::identity(6);
    for (int k = 0; k < 50; ++k) {
      const cplx e = std::polar(1.0, 0.1 * k);
      CMatrix h = (a * e + a.adjoint() * std::conj(e)) * cplx(0.5);
      const auto warm = herm_eig_max_warm(h, basis);
      const auto cold = herm_eig_max(h);
      CHECK(std::abs(warm.value - cold.value) < 1e-11);
      CHECK(residual(h, warm) < 1e-10 * std::max(1.0, h.frobenius()));
    }
  }

  TEST_CASE("op2norm examples") {
    CHECK(op2norm(CMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-14));
    const cplx d[] = {2.0, cplx(0, -3)};
    CHECK(op2norm(CMatrix::diagonal(d)) == doctest::Approx(3.0).epsilon(1e-14));
    const CMatrix x0{{1, 0, 0}, {0, 1.0 / std::sqrt(2.0), 0}, {0, 0, 0.5}};
    CHECK(op2norm(x0) * op2norm(inverse(x0)) == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("op2norm is unitarily invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 6;
      const CMatrix m = random_matrix(rng, n);
      const CMatrix u = random_unitary(rng, n), v = random_unitary(rng, n);
      CHECK(std::abs(op2norm(u * m * v) - op2norm(m)) <= 1e-9 * op2norm(m));
    }
  }

  TEST_CASE("solve examples") {
    std::mt19937_64 rng(14);
    const CMatrix b = random_matrix(rng, 4);
    CHECK((solve(CMatrix::identity(4), b) - b).max_abs() < 1e-15);
    const CMatrix half = solve(CMatrix::identity(3) * cplx(2.0), CMatrix::identity(3));
    CHECK((half - CMatrix::identity(3) * cplx(0.5)).max_abs() < 1e-15);

    const double t = 0.37;
    const CMatrix jt = CMatrix::jordan(3).adjoint();
    const CMatrix inv = solve(CMatrix::identity(3) - jt * cplx(t), CMatrix::identity(3));
    const CMatrix neumann = CMatrix::identity(3) + jt * cplx(t) + jt * jt * cplx(t * t);
    CHECK((inv - neumann).max_abs() < 1e-14);
  }

  TEST_CASE("solve round-trips on random well-conditioned matrices") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + trial % 10;
      const CMatrix m = random_matrix(rng, n) + CMatrix::identity(n) * cplx(3.0 * n);
      const CMatrix x = inverse(m);
      CHECK((m * x - CMatrix::identity(n)).max_abs() < 1e-9);
    }
  }

  TEST_CASE("singular matrices report the failing stage") {
    const CMatrix m{{1.0, 2.0}, {2.0, 4.0}};
    try {
      solve(m, CMatrix::identity(2));
      FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
      CHECK(e.stage == 1);
    }
  }

  TEST_CASE("constructors reject non-finite entries") {
    CHECK_THROWS_AS(CMatrix(1, {cplx(std::nan(""), 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS((CMatrix{{1.0, std::numeric_limits<double>::infinity()}, {0.0, 1.0}}), std::invalid_argument);
  }

  TEST_CASE("tolerance overrides") {
    const Tolerances t = parse_tolerance_overrides("hermitian=1e-10,lsc_slack=2e-7");
    CHECK(t.hermitian == 1e-10);
    CHECK(t.lsc_slack == 2e-7);
    CHECK(t.pivot == Tolerances{}.pivot);
    CHECK_THROWS_AS(parse_tolerance_overrides("nosuchkey=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tolerance_overrides("hermitian=abc"), std::invalid_argument);
  }
}
