#pragma once

#include <cstdint>
#include <vector>

#include "torpoly/rat.hpp"

namespace torpoly {

/// Fixed-length vector of coordinates in Z[1/2], stored as doubled integers.
/// Either all entries are integers or all are half-integers; the shared
/// parity of the doubled values enforces that.
class HalfIntVec {
 public:
  /// Takes the doubled values 2*k_j. Throws std::invalid_argument if empty
  /// or if the entries mix parities.
  explicit HalfIntVec(std::vector<std::int64_t> doubled);

  /// Accepts rationals with denominator 1 or 2 only.
  static HalfIntVec from_rationals(const std::vector<Rat>& values);

  std::size_t size() const { return dbl_.size(); }
  std::int64_t doubled(std::size_t i) const { return dbl_.at(i); }
  Rat at(std::size_t i) const { return make_rat(dbl_.at(i), 2); }
  bool half_integral() const { return (dbl_.front() & 1) != 0; }
  const std::vector<std::int64_t>& doubled_values() const { return dbl_; }

  bool operator==(const HalfIntVec&) const = default;

 private:
  std::vector<std::int64_t> dbl_;
};

}  // namespace torpoly
