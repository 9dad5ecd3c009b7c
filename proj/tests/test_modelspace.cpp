#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "blaschke_lab/modelspace.hpp"
#include "blaschke_lab/nrange.hpp"
#include "blaschke_lab/unicrit.hpp"
#include "test_support.hpp"

using namespace blaschke_lab;
using testing_support::random_blaschke;
using testing_support::random_zeros;

namespace {

// Second-largest eigenvalue of a Hermitian matrix via deflation of the top pair.
double second_eigenvalue(const CMatrix& h) {
  const EigPair top = herm_eig_max(h);
  CMatrix d = h;
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) -= (top.value + 10.0) * top.vector[i] * std::conj(top.vector[j]);
  return herm_eig_max(d).value;
}

}  // namespace

TEST_SUITE("modelspace") {
  TEST_CASE("z^n gives the Jordan block") {
    for (int n = 1; n <= 6; ++n) {
      const auto s = tmw_matrix(BlaschkeProduct::power(n));
      CHECK((s.matrix - CMatrix::jordan(n)).max_abs() < 1e-15);
    }
  }

  TEST_CASE("two symmetric zeros") {
    const double t = 0.7;
    const auto s = tmw_matrix(BlaschkeProduct({t, -t}));
    const CMatrix want{{t, 1 - t * t}, {0.0, -t}};
    CHECK((s.matrix - want).max_abs() < 1e-15);
  }

  TEST_CASE("unicritical symbol reproduces tI + (1-t^2) A_t") {
    for (int n = 2; n <= 8; ++n)
      for (double t : {-0.8, -0.3, 0.0, 0.25, 0.6, 0.95}) {
        const auto s = tmw_matrix(BlaschkeProduct::unicritical(t, n));
        CHECK((s.matrix - unicritical_shift(n, t)).max_abs() < 1e-12);
      }
    const double t = 0.4;
    const CMatrix a3{{0.0, 1.0, -t}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
    CHECK((kms_matrix(3, t) - a3).max_abs() == 0.0);
  }

  TEST_CASE("structural invariants on random symbols") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 500; ++k) {
      const int n = 1 + k % 8;
      const auto theta = random_blaschke(rng, n);
      const CMatrix m = tmw_matrix(theta).matrix;
      REQUIRE(m.is_upper_triangular());
      for (int j = 0; j < n; ++j) CHECK(m(j, j) == theta.zeros()[j]);
      CHECK(op2norm(m) <= 1.0 + 1e-9);
      if (n >= 2 && k % 5 == 0) {
        const CMatrix defect = CMatrix::identity(n) - m.adjoint() * m;
        CHECK(second_eigenvalue(defect) < 1e-8);
      }
    }
  }

  TEST_CASE("apply_blaschke examples") {
    std::mt19937_64 rng(52);
    const auto theta = random_blaschke(rng, 5);
    const auto s = tmw_matrix(theta);
    CHECK((apply_blaschke(BlaschkeProduct({0.0}), s) - s.matrix).max_abs() < 1e-14);
    CHECK(apply_blaschke(theta, s).max_abs() < 1e-10);

    const CMatrix j3 = CMatrix::jordan(3);
    const CMatrix sq = apply_blaschke(BlaschkeProduct::power(2), tmw_matrix(BlaschkeProduct::power(3)));
    CHECK((sq - j3 * j3).max_abs() < 1e-15);
    CHECK(op2norm(sq) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("factor order does not matter") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 20; ++k) {
      const auto theta = random_blaschke(rng, 6);
      const auto b = random_blaschke(rng, 4);
      auto zs = b.zeros();
      std::reverse(zs.begin(), zs.end());
      const BlaschkeProduct rev(zs, b.lambda());
      const auto s = tmw_matrix(theta);
      CHECK((apply_blaschke(b, s) - apply_blaschke(rev, s)).max_abs() < 1e-11);
    }
  }

  TEST_CASE("norm of B(S_Theta)") {
    CHECK(norm_B_of_S(BlaschkeProduct::power(1), BlaschkeProduct::power(2)) == doctest::Approx(1.0).epsilon(1e-14));
    std::mt19937_64 rng(54);
    for (int k = 0; k < 20; ++k)
      CHECK(std::abs(norm_B_of_S(random_blaschke(rng, 2), random_blaschke(rng, 5)) - 1.0) < 1e-8);
    CHECK_THROWS_AS(norm_B_of_S(random_blaschke(rng, 3), random_blaschke(rng, 3)), std::invalid_argument);
  }

  TEST_CASE("apply_poly matches repeated products") {
    const CMatrix m = unicritical_shift(4, 0.3);
    const CPoly p({1.0, -2.0, cplx(0, 0.5), 3.0});
    const CMatrix want = CMatrix::identity(4) - m * cplx(2.0) + m * m * cplx(0, 0.5) + m * m * m * cplx(3.0);
    CHECK((apply_poly(p, m) - want).max_abs() < 1e-13);
  }

  TEST_CASE("rotation law for unicritical symbols") {
    std::mt19937_64 rng(55);
    for (int k = 0; k < 10; ++k) {
      const cplx z0 = testing_support::random_in_disk(rng, 0.9);
      const int n = 2 + k % 4;
      const auto rot = support_table(tmw_matrix(BlaschkeProduct::unicritical(z0, n)).matrix, 256);
      const auto ref = support_table(tmw_matrix(BlaschkeProduct::unicritical(std::abs(z0), n)).matrix, 256);
      const cplx u = z0 / std::abs(z0);
      // W(rotated) = u W(ref): the support function shifts by arg u.
      for (std::size_t j = 0; j < rot.size(); ++j) CHECK(contains_point(rot, u * ref.witnesses[j], 1e-8));
      for (std::size_t j = 0; j < ref.size(); ++j) CHECK(contains_point(ref, std::conj(u) * rot.witnesses[j], 1e-8));
    }
  }

  TEST_CASE("zero ordering does not change the numerical range") {
    std::mt19937_64 rng(56);
    for (int k = 0; k < 20; ++k) {
      auto zs = random_zeros(rng, 2 + k % 5);
      const auto a = support_table(tmw_matrix(BlaschkeProduct(zs)).matrix, 128);
      std::shuffle(zs.begin(), zs.end(), rng);
      const auto b = support_table(tmw_matrix(BlaschkeProduct(zs)).matrix, 128);
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a.h[j] - b.h[j]) < 1e-8);
    }
  }
}
