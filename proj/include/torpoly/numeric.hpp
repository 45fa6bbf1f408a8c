#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "torpoly/rat.hpp"

namespace torpoly {

/// Working precision for numeric collapse; 50 decimal digits leaves ample
/// headroom over the 30-digit default output precision.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rat& r) {
  return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

}  // namespace torpoly
