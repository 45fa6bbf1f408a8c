#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "torpoly/half_int.hpp"
#include "torpoly/weights.hpp"

namespace torpoly::testing {

/// Integer coordinates.
inline HalfIntVec hiv(std::initializer_list<long> coords) {
  std::vector<std::int64_t> dbl;
  for (const long c : coords) dbl.push_back(2 * c);
  return HalfIntVec(std::move(dbl));
}

/// Doubled coordinates, for half-integer inputs.
inline HalfIntVec hiv_dbl(std::initializer_list<long> doubled) {
  return HalfIntVec(std::vector<std::int64_t>(doubled.begin(), doubled.end()));
}

/// Weakly decreasing nonnegative ray base with coordinates <= max_coord;
/// all entries shifted by 1/2 when half is set.
inline HalfIntVec random_tau(std::mt19937& rng, int n, int max_coord, bool half = false) {
  std::uniform_int_distribution<int> dist(0, max_coord);
  std::vector<std::int64_t> dbl(n + 1);
  for (auto& v : dbl) v = 2 * dist(rng);
  std::sort(dbl.begin(), dbl.end(), std::greater<>());
  if (half)
    for (auto& v : dbl) v += 1;
  return HalfIntVec(std::move(dbl));
}

/// Dominant M-weight with |coordinates| <= max_coord; the last coordinate
/// may be negative.
inline WeightM random_sigma(std::mt19937& rng, int n, int max_coord, bool half = false) {
  std::uniform_int_distribution<int> dist(0, max_coord);
  std::vector<std::int64_t> dbl(n);
  for (auto& v : dbl) v = 2 * dist(rng);
  std::sort(dbl.begin(), dbl.end(), std::greater<>());
  if (half)
    for (auto& v : dbl) v += 1;
  if (std::uniform_int_distribution<int>(0, 1)(rng)) dbl.back() = -dbl.back();
  return WeightM(n, HalfIntVec(std::move(dbl)));
}

/// Dominant G-weight, possibly with negative last coordinate.
inline WeightG random_weight_g(std::mt19937& rng, int n, int max_coord, bool half = false) {
  std::uniform_int_distribution<int> dist(0, max_coord);
  std::vector<std::int64_t> dbl(n + 1);
  for (auto& v : dbl) v = 2 * dist(rng);
  std::sort(dbl.begin(), dbl.end(), std::greater<>());
  if (half)
    for (auto& v : dbl) v += 1;
  if (std::uniform_int_distribution<int>(0, 1)(rng)) dbl.back() = -dbl.back();
  return WeightG(n, HalfIntVec(std::move(dbl)));
}

}  // namespace torpoly::testing
