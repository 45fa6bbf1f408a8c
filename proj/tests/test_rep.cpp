#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "torpoly/rep.hpp"

using namespace torpoly;
using namespace torpoly::testing;

TEST_CASE("Weyl dimensions for G") {
  CHECK(dim_G(WeightG(1, hiv({1, 0}))) == 4);
  CHECK(dim_G(WeightG(1, hiv({0, 0}))) == 1);
  for (long m = 1; m <= 5; ++m) CHECK(dim_G(WeightG(1, hiv({m, m}))) == 2 * m + 1);
  CHECK(dim_G(WeightG(2, hiv({1, 0, 0}))) == 6);
  // spin representations
  CHECK(dim_G(WeightG(1, hiv_dbl({1, 1}))) == 2);
  CHECK(dim_G(WeightG(1, hiv_dbl({1, -1}))) == 2);
}

TEST_CASE("Weyl dimensions for K and M") {
  CHECK(dim_K(WeightK(1, hiv({0}))) == 1);
  CHECK(dim_K(WeightK(1, hiv({1}))) == 3);
  CHECK(dim_K(WeightK(2, hiv({1, 0}))) == 5);
  CHECK(dim_K(WeightK(2, hiv({1, 1}))) == 10);

  for (long l : {0L, 5L, -3L}) CHECK(dim_M(WeightM(1, hiv({l}))) == 1);
  CHECK(dim_M(WeightM(2, hiv({0, 0}))) == 1);
  CHECK(dim_M(WeightM(2, hiv({1, 0}))) == 4);
  CHECK(dim_M(WeightM(2, hiv({1, 1}))) == 3);
  CHECK(dim_M(WeightM(2, hiv({1, -1}))) == 3);
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(casimir_G(WeightG(1, hiv({1, 0}))) == Rat(3));
  CHECK(casimir_G(WeightG(1, hiv({0, 0}))) == Rat(0));
  CHECK(casimir_G(WeightG(2, hiv({1, 0, 0}))) == Rat(5));

  CHECK(casimir_K(WeightK(1, hiv({0}))) == Rat(0));
  CHECK(casimir_K(WeightK(1, hiv({1}))) == Rat(2));
  CHECK(casimir_K(WeightK(2, hiv({1, 0}))) == Rat(4));

  for (long l = -4; l <= 4; ++l)
    CHECK(c_sigma(WeightM(1, hiv({l}))) == Rat(l * l - 1));
}

TEST_CASE("Casimir symmetries") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const bool half = trial % 3 == 1;
    const auto w = random_weight_g(rng, n, 6, half);
    CHECK(casimir_G(theta_twist(w)) == casimir_G(w));
    const auto s = random_sigma(rng, n, 6, half);
    CHECK(c_sigma(w0_action(s)) == c_sigma(s));
  }
}

TEST_CASE("restriction to K: interlacing, multiplicity one, dimension sum") {
  const auto basic = branch_G_to_K(WeightG(1, hiv({1, 0})));
  REQUIRE(basic.size() == 2);
  CHECK(basic[0] == WeightK(1, hiv({0})));
  CHECK(basic[1] == WeightK(1, hiv({1})));

  const auto trivial = branch_G_to_K(WeightG(1, hiv({0, 0})));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == WeightK(1, hiv({0})));

  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const bool half = trial % 4 == 3;
    const auto w = random_weight_g(rng, n, 6, half);
    const auto constituents = branch_G_to_K(w);
    Int total = 0;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& nu : constituents) {
      total += dim_K(nu);
      CHECK(nu.coords().half_integral() == w.coords().half_integral());
      CHECK(seen.insert(nu.coords().doubled_values()).second);  // multiplicity one
    }
    CHECK(total == dim_G(w));
  }
}

TEST_CASE("spectral gap bound for the trivial ray") {
  for (long m = 1; m <= 20; ++m) {
    const Rat expected(m * m - m - 2);
    for (int p = 0; p <= 3; ++p) CHECK(spectral_gap_bound(1, hiv({0, 0}), m, p) == expected);
  }
  CHECK_THROWS_AS(spectral_gap_bound(1, hiv({0, 0}), 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(spectral_gap_bound(1, hiv({0, 0}), 0, 0), std::invalid_argument);
}

TEST_CASE("branching box bounds") {
  const auto box = branching_box(2, hiv({2, 1, 0}), 3);
  CHECK(box.lower_dbl == std::vector<std::int64_t>{2 * (1 + 3 - 1), 2 * (0 + 3 - 1)});
  CHECK(box.upper_dbl == std::vector<std::int64_t>{2 * (2 + 3 + 1), 2 * (1 + 3 + 1)});
}

TEST_CASE("spectral gap bound is independent of p and grows like m^2") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 2;
    const auto tau = random_tau(rng, n, 3);
    const long m = 1 + trial;
    const Rat at_zero = spectral_gap_bound(n, tau, m, 0);
    for (int p = 1; p <= 2 * n + 1; ++p) CHECK(spectral_gap_bound(n, tau, m, p) == at_zero);
  }
  // residual against m^2 stays linear in m
  for (long m : {10L, 50L, 100L}) {
    const Rat residual = spectral_gap_bound(1, hiv({0, 0}), m, 0) - Rat(m * m);
    CHECK(abs(residual) <= Rat(2 * m + 2));
  }
}

TEST_CASE("ray dimension polynomial") {
  for (int n = 1; n <= 3; ++n) {
    std::mt19937 rng(30 + n);
    const auto tau = random_tau(rng, n, 4);
    const RatPoly fit = dim_ray_polynomial(n, tau);
    CHECK(fit.degree() == n * (n + 1) / 2);
    for (long m = fit.degree() + 2; m <= fit.degree() + 11; ++m)
      CHECK(fit.eval(Rat(m)) == Rat(dim_G(make_ray_weight(n, tau, m))));
  }
  CHECK(dim_ray_polynomial(1, hiv({0, 0})) == RatPoly({Rat(1), Rat(2)}));
}
