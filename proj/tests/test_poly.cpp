#include <doctest.h>

#include <algorithm>

#include "blaschke_lab/poly.hpp"
#include "test_support.hpp"

using namespace blaschke_lab;

namespace {

double match_distance(std::vector<cplx> got, std::vector<cplx> want) {
  double worst = 0.0;
  for (const cplx& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](cplx a, cplx b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("arithmetic and evaluation") {
    const CPoly p({1.0, 2.0, 3.0});
    CHECK(p.degree() == 2);
    CHECK(std::abs(p(2.0) - cplx(17.0)) < 1e-15);
    CHECK(p.derivative().degree() == 1);
    CHECK(std::abs(p.derivative()(1.0) - cplx(8.0)) < 1e-15);
    const CPoly q({0.0, 1.0});
    CHECK(std::abs((p * q)(2.0) - cplx(34.0)) < 1e-14);
    CHECK(std::abs((p - p).max_coeff()) == 0.0);
  }

  TEST_CASE("from_roots expands the product") {
    const cplx roots[] = {0.5, cplx(0, 1), -2.0};
    const CPoly p = CPoly::from_roots(roots);
    CHECK(p.degree() == 3);
    for (const cplx& r : roots) CHECK(std::abs(p(r)) < 1e-14);
    CHECK(std::abs(p[3] - cplx(1.0)) < 1e-15);
  }

  TEST_CASE("Aberth recovers random roots") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + trial % 12;
      auto roots = testing_support::random_zeros(rng, d, 1.5);
      const auto got = aberth_roots(CPoly::from_roots(roots));
      REQUIRE(got.size() == roots.size());
      CHECK(match_distance(got, roots) < 1e-7);
    }
  }

  TEST_CASE("Aberth handles zero roots exactly and double roots") {
    const cplx roots[] = {0.0, 0.0, 0.5, 0.5, cplx(0, -0.3)};
    const auto got = aberth_roots(CPoly::from_roots(roots));
    REQUIRE(got.size() == 5);
    CHECK(std::count(got.begin(), got.end(), cplx(0.0)) == 2);
    CHECK(match_distance(got, {roots, roots + 5}) < 1e-6);
  }

  TEST_CASE("zero polynomial is rejected") { CHECK_THROWS_AS(aberth_roots(CPoly({0.0, 0.0})), std::invalid_argument); }
}
