#include "torpoly/half_int.hpp"

#include <stdexcept>

namespace torpoly {

HalfIntVec::HalfIntVec(std::vector<std::int64_t> doubled) : dbl_(std::move(doubled)) {
  if (dbl_.empty()) throw std::invalid_argument("HalfIntVec: length must be positive");
  const auto parity = dbl_.front() & 1;
  for (const auto v : dbl_) {
    if ((v & 1) != parity)
      throw std::invalid_argument("HalfIntVec: entries must be all integers or all half-integers");
  }
}

HalfIntVec HalfIntVec::from_rationals(const std::vector<Rat>& values) {
  std::vector<std::int64_t> dbl;
  dbl.reserve(values.size());
  for (const auto& v : values) {
    Rat d = v * 2;
    if (!is_integer(d))
      throw std::invalid_argument("HalfIntVec: " + to_string(v) + " is not in Z[1/2]");
    if (!d.get_num().fits_slong_p())
      throw std::invalid_argument("HalfIntVec: coordinate " + to_string(v) + " out of range");
    dbl.push_back(d.get_num().get_si());
  }
  return HalfIntVec(std::move(dbl));
}

}  // namespace torpoly
