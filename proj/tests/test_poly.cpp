#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "torpoly/poly.hpp"

using namespace torpoly;

namespace {

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  return make_rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("basic univariate arithmetic") {
  const RatPoly p({Rat(1), Rat(2)});   // 1 + 2t
  const RatPoly q({Rat(3), Rat(-1)});  // 3 - t
  CHECK(p * q == RatPoly({Rat(3), Rat(5), Rat(-2)}));
  CHECK(p + q == RatPoly({Rat(4), Rat(1)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.eval(make_rat(1, 2)) == Rat(2));

  const RatPoly cube = RatPoly::monomial(Rat(3), 2).antiderivative();
  CHECK(cube == RatPoly::monomial(Rat(1), 3));
  CHECK(RatPoly({Rat(0), Rat(0), Rat(1)}).is_even());
  CHECK_FALSE(RatPoly({Rat(0), Rat(1)}).is_even());
}

TEST_CASE("unit tags survive arithmetic and forbid mixing") {
  const RatPoly a = RatPoly::constant(Rat(2), Unit::MinusCn);
  const RatPoly b = RatPoly::constant(Rat(3), Unit::One);
  CHECK((a * b).unit() == Unit::MinusCn);
  CHECK_THROWS_AS(a + b, std::logic_error);
  CHECK_THROWS_AS(a * RatPoly::constant(Rat(1), Unit::TwoPiCn), std::logic_error);
  CHECK(unit_label(Unit::MinusCn) == "-c(n)");
  CHECK(unit_label(Unit::TwoPiCn) == "2*pi*c(n)");
}

TEST_CASE("lagrange interpolation recovers exact polynomials") {
  const RatPoly target({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  std::vector<std::pair<Rat, Rat>> pts;
  for (long x : {-2L, 0L, 3L, 7L}) pts.emplace_back(Rat(x), target.eval(Rat(x)));
  CHECK(lagrange_interpolate(pts) == target);

  pts.emplace_back(Rat(3), Rat(0));
  CHECK_THROWS_AS(lagrange_interpolate(pts), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> coeffs;
    const int deg = 1 + trial % 5;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rnd_rat(rng));
    const RatPoly poly(std::move(coeffs));
    std::vector<std::pair<Rat, Rat>> samples;
    for (long x = 0; x <= deg; ++x) samples.emplace_back(Rat(x), poly.eval(Rat(x)));
    CHECK(lagrange_interpolate(samples) == poly);
  }
}

TEST_CASE("bivariate products and integration") {
  // (t - m)(t + m) = t^2 - m^2
  const BiRatPoly t = BiRatPoly::linear_in_t(Rat(0), Rat(1));
  const BiRatPoly m = BiRatPoly::linear_in_m(Rat(0), Rat(1));
  const BiRatPoly prod = (t - m) * (t + m);
  CHECK(prod.coeff(2, 0) == Rat(1));
  CHECK(prod.coeff(0, 2) == Rat(-1));
  CHECK(prod.coeff(1, 1) == Rat(0));
  CHECK(prod.degree_t() == 2);
  CHECK(prod.degree_m() == 2);

  const BiRatPoly anti = (t * t).antiderivative_t();
  CHECK(anti.coeff(3, 0) == make_rat(1, 3));
  CHECK(anti.eval(Rat(3), Rat(0)) == Rat(9));

  // t^2 - m^2 at t = m + 1 collapses to 2m + 1
  CHECK(prod.substitute_t_m_plus(Rat(1)) == RatPoly({Rat(1), Rat(2)}));
}

TEST_CASE("substitution commutes with evaluation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    BiRatPoly p = BiRatPoly::constant(rnd_rat(rng));
    for (int f = 0; f < 3; ++f) {
      BiRatPoly factor = BiRatPoly::linear_in_t(rnd_rat(rng), rnd_rat(rng)) +
                         BiRatPoly::linear_in_m(Rat(0), rnd_rat(rng));
      p = p * factor;
    }
    const Rat shift = rnd_rat(rng);
    const RatPoly substituted = p.substitute_t_m_plus(shift);
    const Rat m0 = rnd_rat(rng);
    CHECK(substituted.eval(m0) == p.eval(m0 + shift, m0));
    CHECK(p.at_m(m0).eval(m0 + shift) == substituted.eval(m0));
  }
}
