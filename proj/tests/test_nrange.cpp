#include <doctest.h>

#include <cmath>
#include <numbers>

#include "blaschke_lab/modelspace.hpp"
#include "blaschke_lab/nrange.hpp"
#include "blaschke_lab/unicrit.hpp"
#include "test_support.hpp"

using namespace blaschke_lab;
using testing_support::random_blaschke;
using testing_support::random_matrix;

namespace {

// Dense sampling of |B| on the circle |z| = rho: an oracle for disk-shaped ranges.
double circle_max(const BlaschkeProduct& b, double rho) {
  double best = 0.0;
  for (int k = 0; k < 20000; ++k) best = std::max(best, std::abs(b(std::polar(rho, 2.0 * std::numbers::pi * k / 20000))));
  return best;
}

}  // namespace

TEST_SUITE("nrange") {
  TEST_CASE("support table of Jordan blocks is a disk") {
    for (int n = 2; n <= 9; ++n) {
      const auto t = support_table(CMatrix::jordan(n), 128);
      for (double h : t.h) CHECK(std::abs(h - std::cos(std::numbers::pi / (n + 1))) < 1e-10);
    }
  }

  TEST_CASE("2x2 ellipse support function") {
    const double t = 0.6;
    const auto tab = support_table(CMatrix{{t, 1 - t * t}, {0.0, -t}}, 256);
    for (std::size_t k = 0; k < tab.size(); ++k) {
      const double c = std::cos(tab.thetas[k]), s = std::sin(tab.thetas[k]);
      const double want = std::sqrt(std::pow((1 + t * t) / 2, 2) * c * c + std::pow((1 - t * t) / 2, 2) * s * s);
      CHECK(std::abs(tab.h[k] - want) < 1e-12);
    }
  }

  TEST_CASE("zero matrix and the minimum direction count") {
    const auto t = support_table(CMatrix(3), 64);
    for (double h : t.h) CHECK(std::abs(h) < 1e-15);
    CHECK_THROWS_AS(support_table(CMatrix(3), 63), std::invalid_argument);
  }

  TEST_CASE("witnesses realize the support values") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 20; ++k) {
      const CMatrix a = random_matrix(rng, 2 + k % 6);
      const auto t = support_table(a, 180);
      for (std::size_t j = 0; j < t.size(); ++j) {
        CHECK(std::abs((std::polar(1.0, -t.thetas[j]) * t.witnesses[j]).real() - t.h[j]) < 1e-9 * std::max(1.0, a.max_abs()));
        CHECK(contains_point(t, t.witnesses[j], 1e-8 * std::max(1.0, a.max_abs())));
      }
    }
  }

  TEST_CASE("membership examples") {
    const auto j3 = support_table(CMatrix::jordan(3), 720);
    CHECK(contains_point(j3, 0.0, 1e-12));
    CHECK_FALSE(contains_point(j3, 0.99, 1e-12));
    CHECK(contains_edisk(j3, {0.0, std::cos(std::numbers::pi / 4)}, 1e-8));
    CHECK_FALSE(contains_edisk(j3, {0.0, 0.8}, 1e-8));

    for (int k = 1; k <= 9; ++k) {
      const double t = 0.1 * k;
      const auto tab = support_table(unicritical_shift(3, t), 720);
      CHECK(contains_edisk(tab, {t - (1 - t * t) * t / 4.0, (1 - t * t) / std::sqrt(2.0)}, 1e-8));
      const auto at = support_table(kms_matrix(3, t), 720);
      CHECK(contains_point(at, curve_center(CurveSpec(3, t)), 1e-9));
    }
  }

  TEST_CASE("scaling and translation covariance") {
    std::mt19937_64 rng(62);
    const CMatrix a = random_matrix(rng, 4);
    const cplx alpha(0.3, -0.2), beta = std::polar(0.7, 0.0);
    const auto ta = support_table(a, 256);
    const auto tb = support_table(CMatrix::identity(4) * alpha + a * beta, 256);
    for (std::size_t k = 0; k < ta.size(); ++k) {
      CHECK(std::abs(tb.h[k] - ((std::polar(1.0, -ta.thetas[k]) * alpha).real() + 0.7 * ta.h[k])) < 1e-9);
      CHECK(std::abs(tb.witnesses[k] - (alpha + beta * ta.witnesses[k])) < 1e-7);
    }
  }

  TEST_CASE("W(S_B) sits inside W(S_Theta) when B divides Theta") {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 20; ++k) {
      const auto b = random_blaschke(rng, 1 + k % 3);
      const auto c = random_blaschke(rng, 1 + k % 4);
      const auto tb = support_table(tmw_matrix(b).matrix, 256);
      const auto tt = support_table(tmw_matrix(b * c).matrix, 256);
      for (std::size_t j = 0; j < tb.size(); ++j) CHECK(tb.h[j] <= tt.h[j] + 1e-8);
    }
  }

  TEST_CASE("max_modulus examples") {
    for (int n = 3; n <= 9; ++n) {
      const auto t = support_table(CMatrix::jordan(n), 720);
      const auto m = max_modulus(BlaschkeProduct::power(n - 1), t);
      CHECK(std::abs(m.value - std::pow(std::cos(std::numbers::pi / (n + 1)), n - 1)) < 1e-10);
      CHECK(std::abs(std::abs(BlaschkeProduct::power(n - 1)(m.argmax)) - m.value) < 1e-10);
    }
    const auto t9 = support_table(CMatrix::jordan(9), 720);
    CHECK(max_modulus(BlaschkeProduct::power(8), t9).value == doctest::Approx(0.66935).epsilon(1e-4));
  }

  TEST_CASE("max_modulus against dense circle sampling") {
    std::mt19937_64 rng(64);
    for (int k = 0; k < 10; ++k) {
      const int n = 2 + k % 6;
      const auto b = random_blaschke(rng, 3);
      const auto m = max_modulus(b, support_table(CMatrix::jordan(n), 720));
      CHECK(std::abs(m.value - circle_max(b, std::cos(std::numbers::pi / (n + 1)))) < 1e-7);
    }
  }

  TEST_CASE("refining the table never lowers the maximum") {
    std::mt19937_64 rng(65);
    for (int k = 0; k < 20; ++k) {
      const auto theta = random_blaschke(rng, 3 + k % 4);
      const auto b = random_blaschke(rng, 1 + k % 3);
      const CMatrix a = tmw_matrix(theta).matrix;
      const double m1 = max_modulus(b, support_table(a, 360)).value;
      const double m2 = max_modulus(b, support_table(a, 720)).value;
      CHECK(m2 >= m1 - 1e-9);
      CHECK(std::abs(m2 - m1) < 1e-6);
    }
  }

  TEST_CASE("lsc_check examples") {
    const auto v = lsc_check(BlaschkeProduct::power(2), BlaschkeProduct::power(3));
    CHECK(std::abs(v.max_value - 0.5) < 1e-8);
    CHECK(v.passed);
    CHECK_THROWS_AS(lsc_check(BlaschkeProduct::power(2), BlaschkeProduct::power(2)), std::invalid_argument);

    std::mt19937_64 rng(66);
    for (int k = 0; k < 20; ++k) {
      const int m = 1 + k % 3;
      const auto b = BlaschkeProduct::unicritical(testing_support::random_in_disk(rng, 0.9), m,
                                                  testing_support::random_unimodular(rng));
      CHECK(lsc_check(b, random_blaschke(rng, m + 1 + k % 3)).passed);
    }
    for (int k = 0; k < 20; ++k) CHECK(lsc_check(random_blaschke(rng, 2), random_blaschke(rng, 6 + k % 3)).passed);
  }

  TEST_CASE("inscribed pseudohyperbolic radius") {
    const auto j3 = inscribed_ph_radius(support_table(CMatrix::jordan(3), 720));
    CHECK(j3.best >= 1.0 / std::sqrt(2.0) - 1e-6);
    CHECK(std::abs(j3.center.z0) < 1e-3);
    CHECK(j3.heuristic);

    const double t = 0.9;
    const auto ell = inscribed_ph_radius(support_table(CMatrix{{t, 1 - t * t}, {0.0, -t}}, 720));
    CHECK(ell.best < 0.5);

    for (double s : {0.2, 0.5, 0.8}) {
      const auto d = inscribed_ph_radius(support_table(unicritical_shift(2, s), 720));
      CHECK(std::abs(d.best - 0.25 * (5 - s * s - std::sqrt((1 - s * s) * (9 - s * s)))) < 1e-5);
    }
  }

  TEST_CASE("ellipse exclusion chain") {
    const double t = 0.9;
    for (int k = 0; k < 20; ++k) {
      const cplx z0 = std::polar(0.04 * k, 0.3 * k);
      const auto e = ellipse_excludes_half_disk(t, z0);
      CHECK(e.excluded);
      if (e.center_in_range) {
        CHECK(e.ratio >= e.ratio_lower_bound - 1e-12);
        CHECK(e.wider_than_strip);
      }
    }
    // Below sqrt(3/4) the chain proves nothing for small centers.
    CHECK_FALSE(ellipse_excludes_half_disk(0.5, 0.0).excluded);
  }
}
