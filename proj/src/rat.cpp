#include "torpoly/rat.hpp"

#include <stdexcept>

namespace torpoly {

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Int(s);
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  Rat r(num);
  r /= Rat(den);
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_integer: " + to_string(r) + " is not integral");
  return r.get_num();
}

Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1);
  Rat b = base;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

}  // namespace torpoly
