#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace torpoly {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" with arbitrary-precision integers.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// mpq_class(p,q) does not reduce; every Rat in this library is canonical.
inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Throws std::domain_error when r has a nontrivial denominator.
Int to_integer(const Rat& r);

Rat rat_pow(const Rat& base, unsigned e);

}  // namespace torpoly
