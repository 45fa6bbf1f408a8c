#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "torpoly/json_io.hpp"
#include "torpoly/rep.hpp"
#include "torpoly/torsion.hpp"

using namespace torpoly;
using namespace torpoly::testing;

namespace {

RatPoly closed_form_3d(long tau1) {
  // -( (tau1+1)^3/3 + 2(tau1+1)^2 m + 2(tau1+1) m^2 ), unit 2 pi c(1)
  const Rat a(tau1 + 1);
  return RatPoly({-a * a * a / 3, -2 * a * a, -2 * a}, Unit::TwoPiCn);
}

}  // namespace

TEST_CASE("three-dimensional torsion polynomial in closed form") {
  for (long tau1 = 0; tau1 <= 5; ++tau1) {
    const auto p = torsion_polynomial(1, hiv({tau1, 0}));
    CHECK(p.poly == closed_form_3d(tau1));
    CHECK(p.degree() == 2);
  }
  CHECK(torsion_polynomial(1, hiv({0, 0})).eval_in_unit(1) == make_rat(-13, 3));
}

TEST_CASE("higher-rank coefficients match an independent CAS evaluation") {
  // frozen from a computer-algebra expansion of the defining integrals
  CHECK(torsion_polynomial(2, hiv({0, 0, 0})).poly ==
        RatPoly({make_rat(-31, 45), Rat(-4), make_rat(-22, 3), make_rat(-16, 3), make_rat(-4, 3)},
                Unit::TwoPiCn));
  CHECK(torsion_polynomial(3, hiv({2, 1, 1, 0})).poly ==
        RatPoly({make_rat(-8661, 14), make_rat(-504341, 210), make_rat(-21955, 6), Rat(-2899),
                 make_rat(-3920, 3), make_rat(-5068, 15), make_rat(-140, 3), make_rat(-8, 3)},
                Unit::TwoPiCn));
  CHECK(torsion_polynomial(1, hiv_dbl({1, 1})).poly ==
        RatPoly({make_rat(-11, 6), Rat(-4), Rat(-2)}, Unit::TwoPiCn));
}

TEST_CASE("degree law for the torsion polynomial") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const auto tau = random_tau(rng, n, 6, trial % 4 == 3);
    CHECK(torsion_polynomial(n, tau).degree() == n * (n + 1) / 2 + 1);
  }
}

TEST_CASE("leading term cancels against m times the dimension") {
  const auto report = leading_term_report(1, hiv({0, 0}));
  CHECK(report.residual == RatPoly({make_rat(-1, 3), Rat(-1)}, Unit::TwoPiCn));
  CHECK(report.expected_degree == 1);
  CHECK(report.degree_ok);

  const auto report2 = leading_term_report(2, hiv({0, 0, 0}));
  CHECK(report2.degree_ok);
  CHECK(report2.residual.degree() <= 3);

  std::mt19937 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + trial % 3;
    CHECK(leading_term_report(n, random_tau(rng, n, 5)).degree_ok);
  }
}

TEST_CASE("bivariate route equals the sample-and-interpolate oracle") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 9; ++trial) {
    const int n = 1 + trial % 3;
    const auto tau = random_tau(rng, n, 5, trial % 3 == 2);
    const auto direct = torsion_polynomial(n, tau);
    const auto fitted = torsion_polynomial_by_interpolation(n, tau);
    CHECK(direct.poly == fitted.poly);
  }
}

TEST_CASE("regularized Mellin values") {
  for (long l = 0; l <= 3; ++l) {
    for (long c = 0; c <= 4; ++c) {
      const Rat expected = Rat(c * c * c) / 3 - Rat(l * l * c);
      CHECK(mellin_value(1, WeightM(1, hiv({l})), Rat(c)) == expected);
    }
  }
  CHECK(mellin_value(1, WeightM(1, hiv({0})), Rat(0)) == Rat(0));
  CHECK_THROWS_AS(mellin_value(1, WeightM(1, hiv({0})), Rat(-1)), std::invalid_argument);
}

TEST_CASE("alternating Mellin sum reproduces the torsion polynomial") {
  std::mt19937 rng(54);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const auto tau = random_tau(rng, n, 4, trial % 5 == 4);
    const auto p = torsion_polynomial(n, tau);
    for (long m = 1; m <= 5; ++m) CHECK(alternating_mellin_sum(n, tau, m) == p.eval_in_unit(m));
  }
}

TEST_CASE("Gamma reflection values at half-integers") {
  for (unsigned i = 0; i <= 10; ++i) CHECK(gamma_monomial_identity(i));
}

TEST_CASE("Gaussian moments") {
  CHECK(gaussian_moment_ratio(0, Rat(4)) == Rat(1));
  CHECK(gaussian_moment_ratio(1, Rat(4)) == make_rat(1, 8));
  CHECK(gaussian_moment_ratio(2, make_rat(1, 2)) == Rat(3));
  CHECK(abs(gaussian_moment(0, Rat(4)) - sqrt(pi_real()) / 2) < Real("1e-45"));
  CHECK_THROWS_AS(gaussian_moment_ratio(1, Rat(0)), std::invalid_argument);
}

TEST_CASE("identity trace in closed form") {
  const Real c1 = PlancherelConstant::known(1).value();
  const auto trace = identity_trace(1, hiv({0, 0}), 1, Rat(1), c1);

  // triangle-inequality envelope from the same moment data
  const Real envelope = 2 * sqrt(pi_real()) *
                        (exp(Real(-4)) * c1 * Real("1.5") + exp(Real(-1)) * c1 * Real("4.5"));
  CHECK(abs(trace.value) <= envelope);
  // the k = n term dominates and enters positively
  CHECK(trace.value > 0);

  CHECK_THROWS_AS(identity_trace(1, hiv({0, 0}), 1, Rat(0), c1), std::invalid_argument);
  CHECK_THROWS_AS(identity_trace(1, hiv({0, 0}), 0, Rat(1), c1), std::invalid_argument);
}

TEST_CASE("closed form matches adaptive quadrature") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> t_num(1, 16);
  std::uniform_int_distribution<long> m_dist(1, 10);
  for (int n = 1; n <= 2; ++n) {
    const Real c_n = (n == 1) ? PlancherelConstant::known(1).value() : Real(1);
    for (int trial = 0; trial < 10; ++trial) {
      const Rat t = make_rat(t_num(rng), 4);  // t in [1/4, 4]
      const long m = m_dist(rng);
      const auto tau = random_tau(rng, n, 3);
      const Real closed = identity_trace(n, tau, m, t, c_n).value;
      const Real quad = identity_trace_by_quadrature(n, tau, m, t, c_n);
      REQUIRE(closed != 0);
      CHECK(abs(closed - quad) / abs(closed) < Real("1e-12"));
    }
  }
}

TEST_CASE("rescaled identity trace stays bounded for large t") {
  const auto tau = hiv({1, 0});
  const Real c1 = PlancherelConstant::known(1).value();
  const long m = 2;
  const Rat lambda_n(m);  // smallest exponent, tau_{n+1} = 0
  Real previous(0);
  bool first = true;
  for (long t = 1; t <= 32; t *= 2) {
    const Real rescaled =
        abs(identity_trace(1, tau, m, Rat(t), c1).value) * exp(to_real(Rat(t) * lambda_n * lambda_n));
    if (!first) CHECK(rescaled < previous);
    previous = rescaled;
    first = false;
  }
}

TEST_CASE("volume scaling of the L2 torsion") {
  const auto base = l2_torsion(1, hiv({0, 0}), 1, Real(1), std::nullopt);
  CHECK(!base.numeric.has_value());
  CHECK(abs(base.in_unit - to_real(make_rat(-13, 3))) < Real("1e-40"));

  const Real c1 = PlancherelConstant::known(1).value();
  const auto with_c = l2_torsion(1, hiv({0, 0}), 1, Real(1), c1);
  REQUIRE(with_c.numeric.has_value());
  CHECK(abs(*with_c.numeric - to_real(make_rat(-13, 3)) / (2 * pi_real())) < Real("1e-40"));

  const auto doubled = l2_torsion(1, hiv({0, 0}), 1, Real(2), c1);
  CHECK(abs(*doubled.numeric - 2 * *with_c.numeric) < Real("1e-40"));

  const auto second = l2_torsion(1, hiv({1, 0}), 2, Real(1), c1);
  CHECK(abs(*second.numeric - to_real(make_rat(-104, 3)) / (2 * pi_real())) < Real("1e-38"));

  CHECK_THROWS_AS(l2_torsion(1, hiv({0, 0}), 0, Real(1), c1), std::invalid_argument);
  CHECK_THROWS_AS(l2_torsion(1, hiv({0, 0}), 1, Real(0), c1), std::invalid_argument);
}

TEST_CASE("torsion polynomial serialization") {
  const auto p = torsion_polynomial(1, hiv({0, 0}));
  const auto j = torsion_to_json(p, PlancherelConstant::known(1));
  CHECK(j["n"] == 1);
  CHECK(j["tau"] == ojson::array({0, 0}));
  CHECK(j["unit"] == "2*pi*c(n)");
  CHECK(j["degree"] == 2);
  CHECK(j["coeffs_ascending"] == ojson::array({"-1/3", "-2", "-2"}));
  CHECK(j["c_n_numeric"] == "1/(4*pi^2)");
  CHECK(torsion_to_json(torsion_polynomial(2, hiv({0, 0, 0})), PlancherelConstant::known(2))
            ["c_n_numeric"].is_null());
}
