#include <doctest.h>

#include <cmath>

#include "blaschke_lab/interp.hpp"
#include "test_support.hpp"

using namespace blaschke_lab;
using testing_support::random_blaschke;
using testing_support::random_in_disk;

TEST_SUITE("interp") {
  TEST_CASE("Q examples") {
    const BlaschkeProduct a({0.2, cplx(0.1, -0.5)});
    const CPoly q0 = numerator_q(a, a);
    for (const cplx& c : q0.coeffs()) CHECK(std::abs(c) < 1e-15);

    // A = z against B = (z - 1/2)/(1 - z/2): Q = z(1 - z/2) - (z - 1/2) = 1/2 - z^2/2.
    const CPoly q = numerator_q(BlaschkeProduct({0.0}), BlaschkeProduct({0.5}));
    CHECK(q.degree() == 2);
    CHECK(std::abs(q(0.0) - cplx(0.5)) < 1e-15);
    CHECK(std::abs(q(1.0)) < 1e-15);
    CHECK(std::abs(q(-1.0)) < 1e-15);

    CHECK_THROWS_AS(numerator_q(BlaschkeProduct({0.1}), BlaschkeProduct({0.1, 0.2})), std::invalid_argument);
    CHECK_THROWS_AS(numerator_q(BlaschkeProduct({0.1}, cplx(0, 1)), BlaschkeProduct({0.2})), std::invalid_argument);
  }

  TEST_CASE("Q matches (A - B) q_a q_b") {
    std::mt19937_64 rng(81);
    for (int k = 0; k < 20; ++k) {
      const int n = 1 + k % 6;
      const auto a = random_blaschke(rng, n, 0.9, true);
      const auto b = random_blaschke(rng, n, 0.9, true);
      const CPoly q = numerator_q(a, b);
      for (int j = 0; j < 10; ++j) {
        const cplx z = random_in_disk(rng, 0.95);
        const cplx want = (a(z) - b(z)) * a.denominator()(z) * b.denominator()(z);
        CHECK(std::abs(q(z) - want) < 1e-11);
      }
    }
  }

  TEST_CASE("Q is anti-self-inversive") {
    std::mt19937_64 rng(82);
    for (int k = 0; k < 100; ++k) {
      const int n = 1 + k % 6;
      const CPoly q = numerator_q(random_blaschke(rng, n, 0.9, true), random_blaschke(rng, n, 0.9, true));
      CHECK(antiselfinversive_check(q, n) <= 1e-10);
    }
    // Perturbing a coefficient breaks the symmetry.
    const CPoly q = numerator_q(BlaschkeProduct({0.0}), BlaschkeProduct({0.5}));
    std::vector<cplx> c(q.coeffs().begin(), q.coeffs().end());
    c[0] += 1e-3;
    CHECK(antiselfinversive_check(CPoly(c), 1) > 1e-4);
  }

  TEST_CASE("boundary agreement") {
    const auto same = boundary_agreement(BlaschkeProduct({0.3}), BlaschkeProduct({0.3}));
    CHECK(same.lambda == cplx(1.0));
    CHECK(same.defect == 0.0);

    std::mt19937_64 rng(83);
    for (int k = 0; k < 100; ++k) {
      const int n = 1 + k % 6;
      const auto a = random_blaschke(rng, n, 0.9, true);
      const auto b = random_blaschke(rng, n, 0.9, true);
      const auto ag = boundary_agreement(a, b);
      CHECK(std::abs(std::abs(ag.lambda) - 1.0) < 1e-14);
      CHECK(ag.defect <= 1e-10);
      CHECK(std::abs(a(ag.lambda) - b(ag.lambda)) <= 1e-10);
    }
    CHECK_THROWS_AS(boundary_agreement(BlaschkeProduct({0.1}, cplx(0, 1)), BlaschkeProduct({0.2})), std::invalid_argument);
  }

  TEST_CASE("degree drops with shared zeros at the origin") {
    std::mt19937_64 rng(84);
    for (int m = 0; m <= 3; ++m) {
      const int n = 4;
      std::vector<cplx> za(m, 0.0), zb(m, 0.0);
      for (int j = m; j < n; ++j) {
        za.push_back(random_in_disk(rng, 0.9));
        zb.push_back(random_in_disk(rng, 0.9));
      }
      const auto p = degree_profile(numerator_q(BlaschkeProduct(za), BlaschkeProduct(zb)));
      CHECK(p.low == m);
      CHECK(p.high == 2 * n - m);
    }
  }

  TEST_CASE("roots of Q pair across the circle") {
    std::mt19937_64 rng(85);
    for (int k = 0; k < 50; ++k) {
      const int n = 1 + k % 5;
      const CPoly q = numerator_q(random_blaschke(rng, n, 0.9, true), random_blaschke(rng, n, 0.9, true));
      CHECK(zero_pairing_defect(q) < 1e-6);
    }
  }

  TEST_CASE("multiset distance") {
    CHECK(zero_multiset_distance({0.1, 0.5}, {0.5, 0.1}) == 0.0);
    CHECK(std::abs(zero_multiset_distance({0.0, 1.0}, {0.9, 0.2}) - 0.2) < 1e-15);
    CHECK(std::isinf(zero_multiset_distance({0.0}, {0.0, 0.1})));
  }

  TEST_CASE("uniqueness probe never reports a distinct candidate") {
    for (int n = 1; n <= 6; ++n)
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto p = uniqueness_probe(n, seed);
        CHECK(p.status != ProbeStatus::distinct_candidate);
        CHECK(p.a_zeros.size() == static_cast<std::size_t>(n));
        CHECK(p.nodes.size() == static_cast<std::size_t>(n));
        if (p.status == ProbeStatus::recovered) CHECK(p.zero_distance <= 1e-6);
      }
    CHECK(uniqueness_probe(1, 7).status == ProbeStatus::recovered);
    CHECK(std::string(to_string(ProbeStatus::distinct_candidate)) == "distinct_candidate");
    CHECK_THROWS_AS(uniqueness_probe(0, 1), std::invalid_argument);
  }
}
