#include "torpoly/poly.hpp"

#include <stdexcept>

namespace torpoly {

std::string unit_label(Unit u) {
  switch (u) {
    case Unit::One: return "1";
    case Unit::MinusCn: return "-c(n)";
    case Unit::TwoPiCn: return "2*pi*c(n)";
  }
  throw std::logic_error("unit_label: unknown unit");
}

namespace {

Unit combine_units(Unit a, Unit b) {
  if (a == Unit::One) return b;
  if (b == Unit::One) return a;
  throw std::logic_error("polynomial product: both factors carry a nontrivial unit");
}

void require_same_unit(Unit a, Unit b) {
  if (a != b) throw std::logic_error("polynomial sum: mismatched units");
}

}  // namespace

RatPoly::RatPoly(std::vector<Rat> coeffs, Unit unit) : coeffs_(std::move(coeffs)), unit_(unit) {
  trim();
}

RatPoly RatPoly::constant(const Rat& value, Unit unit) { return RatPoly({value}, unit); }

RatPoly RatPoly::monomial(const Rat& coeff, std::size_t power, Unit unit) {
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = coeff;
  return RatPoly(std::move(c), unit);
}

bool RatPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

RatPoly RatPoly::with_unit(Unit unit) const {
  RatPoly p = *this;
  p.unit_ = unit;
  return p;
}

Rat RatPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rat(0);
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::antiderivative() const {
  std::vector<Rat> c(coeffs_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / Rat(static_cast<long>(i + 1));
  return RatPoly(std::move(c), unit_);
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  require_same_unit(unit_, rhs.unit_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  require_same_unit(unit_, rhs.unit_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  const Unit unit = combine_units(lhs.unit_, rhs.unit_);
  if (lhs.is_zero() || rhs.is_zero()) return RatPoly({}, unit);
  std::vector<Rat> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return RatPoly(std::move(c), unit);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first)
        throw std::invalid_argument("lagrange_interpolate: repeated abscissa");
    }
  }
  RatPoly result;
  for (std::size_t k = 0; k < points.size(); ++k) {
    RatPoly basis = RatPoly::constant(points[k].second);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == k) continue;
      basis = basis * RatPoly({-points[j].first, Rat(1)});
      basis *= Rat(1) / (points[k].first - points[j].first);
    }
    result += basis;
  }
  return result;
}

BiRatPoly BiRatPoly::constant(const Rat& value) {
  BiRatPoly p;
  p.c_ = {{value}};
  p.trim();
  return p;
}

BiRatPoly BiRatPoly::linear_in_m(const Rat& a, const Rat& b) {
  BiRatPoly p;
  p.c_ = {{a, b}};
  p.trim();
  return p;
}

BiRatPoly BiRatPoly::linear_in_t(const Rat& a, const Rat& b) {
  BiRatPoly p;
  p.c_ = {{a}, {b}};
  p.trim();
  return p;
}

int BiRatPoly::degree_m() const {
  int deg = -1;
  for (const auto& row : c_) deg = std::max(deg, static_cast<int>(row.size()) - 1);
  return deg;
}

Rat BiRatPoly::coeff(std::size_t pow_t, std::size_t pow_m) const {
  if (pow_t >= c_.size() || pow_m >= c_[pow_t].size()) return Rat(0);
  return c_[pow_t][pow_m];
}

Rat BiRatPoly::eval(const Rat& t, const Rat& m) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat row(0);
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * m + *jt;
    acc = acc * t + row;
  }
  return acc;
}

RatPoly BiRatPoly::at_m(const Rat& m, Unit unit) const {
  std::vector<Rat> c;
  c.reserve(c_.size());
  for (const auto& row : c_) {
    Rat v(0);
    for (auto jt = row.rbegin(); jt != row.rend(); ++jt) v = v * m + *jt;
    c.push_back(v);
  }
  return RatPoly(std::move(c), unit);
}

BiRatPoly BiRatPoly::antiderivative_t() const {
  BiRatPoly p;
  p.c_.resize(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    p.c_[i + 1] = c_[i];
    for (auto& v : p.c_[i + 1]) v /= Rat(static_cast<long>(i + 1));
  }
  p.trim();
  return p;
}

RatPoly BiRatPoly::substitute_t_m_plus(const Rat& shift, Unit unit) const {
  // (m + shift)^i built incrementally
  RatPoly result({}, unit);
  RatPoly power = RatPoly::constant(Rat(1));
  const RatPoly base({shift, Rat(1)});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) power = power * base;
    RatPoly row(c_[i]);
    result += (row * power).with_unit(unit);
  }
  return result;
}

BiRatPoly& BiRatPoly::operator+=(const BiRatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
    if (rhs.c_[i].size() > c_[i].size()) c_[i].resize(rhs.c_[i].size(), Rat(0));
    for (std::size_t j = 0; j < rhs.c_[i].size(); ++j) c_[i][j] += rhs.c_[i][j];
  }
  trim();
  return *this;
}

BiRatPoly& BiRatPoly::operator-=(const BiRatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
    if (rhs.c_[i].size() > c_[i].size()) c_[i].resize(rhs.c_[i].size(), Rat(0));
    for (std::size_t j = 0; j < rhs.c_[i].size(); ++j) c_[i][j] -= rhs.c_[i][j];
  }
  trim();
  return *this;
}

BiRatPoly& BiRatPoly::operator*=(const Rat& scalar) {
  for (auto& row : c_)
    for (auto& v : row) v *= scalar;
  trim();
  return *this;
}

BiRatPoly operator*(const BiRatPoly& lhs, const BiRatPoly& rhs) {
  BiRatPoly p;
  if (lhs.is_zero() || rhs.is_zero()) return p;
  p.c_.resize(lhs.c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) {
      if (lhs.c_[i].empty() || rhs.c_[k].empty()) continue;
      auto& row = p.c_[i + k];
      if (row.size() < lhs.c_[i].size() + rhs.c_[k].size() - 1)
        row.resize(lhs.c_[i].size() + rhs.c_[k].size() - 1, Rat(0));
      for (std::size_t j = 0; j < lhs.c_[i].size(); ++j) {
        for (std::size_t l = 0; l < rhs.c_[k].size(); ++l) row[j + l] += lhs.c_[i][j] * rhs.c_[k][l];
      }
    }
  }
  p.trim();
  return p;
}

void BiRatPoly::trim() {
  for (auto& row : c_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

}  // namespace torpoly
