#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torpoly/rat.hpp"

namespace torpoly {

/// Symbolic scale carried by a polynomial. Stored coefficients are the
/// polynomial divided by the unit, so values in unit MinusCn must be
/// multiplied by -c(n) to recover the actual density.
enum class Unit { One, MinusCn, TwoPiCn };

std::string unit_label(Unit u);

/// Univariate polynomial with exact rational coefficients, ascending powers.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs, Unit unit = Unit::One);

  static RatPoly constant(const Rat& value, Unit unit = Unit::One);
  static RatPoly monomial(const Rat& coeff, std::size_t power, Unit unit = Unit::One);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_even() const;
  Unit unit() const { return unit_; }
  RatPoly with_unit(Unit unit) const;

  /// Zero beyond the degree.
  Rat coeff(std::size_t power) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  RatPoly antiderivative() const;  // vanishing constant term

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rat& scalar);
  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
  friend RatPoly operator*(RatPoly lhs, const Rat& scalar) { return lhs *= scalar; }
  friend RatPoly operator*(const Rat& scalar, RatPoly rhs) { return rhs *= scalar; }
  /// Product; at most one factor may carry a unit other than 1.
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);

  bool operator==(const RatPoly&) const = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
  Unit unit_ = Unit::One;
};

/// Interpolating polynomial through points with pairwise distinct abscissae.
RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/// Polynomial in two variables t and m with exact rational coefficients;
/// coefficient of t^i m^j at index [i][j]. Closed under integration in t
/// and under the substitution t -> m + const.
class BiRatPoly {
 public:
  BiRatPoly() = default;

  static BiRatPoly constant(const Rat& value);
  /// a + b*m
  static BiRatPoly linear_in_m(const Rat& a, const Rat& b);
  /// a + b*t
  static BiRatPoly linear_in_t(const Rat& a, const Rat& b);

  bool is_zero() const { return c_.empty(); }
  int degree_t() const { return static_cast<int>(c_.size()) - 1; }
  int degree_m() const;
  Rat coeff(std::size_t pow_t, std::size_t pow_m) const;

  Rat eval(const Rat& t, const Rat& m) const;
  /// Specializes m, leaving a polynomial in t.
  RatPoly at_m(const Rat& m, Unit unit = Unit::One) const;

  BiRatPoly antiderivative_t() const;
  /// Substitutes t = m + shift; exact, returns a polynomial in m.
  RatPoly substitute_t_m_plus(const Rat& shift, Unit unit = Unit::One) const;

  BiRatPoly& operator+=(const BiRatPoly& rhs);
  BiRatPoly& operator-=(const BiRatPoly& rhs);
  BiRatPoly& operator*=(const Rat& scalar);
  friend BiRatPoly operator+(BiRatPoly lhs, const BiRatPoly& rhs) { return lhs += rhs; }
  friend BiRatPoly operator-(BiRatPoly lhs, const BiRatPoly& rhs) { return lhs -= rhs; }
  friend BiRatPoly operator*(BiRatPoly lhs, const Rat& scalar) { return lhs *= scalar; }
  friend BiRatPoly operator*(const BiRatPoly& lhs, const BiRatPoly& rhs);

  bool operator==(const BiRatPoly&) const = default;

 private:
  void trim();

  // row i = coefficients of t^i as a polynomial in m
  std::vector<std::vector<Rat>> c_;
};

}  // namespace torpoly
