#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtoda {

// Exact rational coefficients. GMP keeps values canonical (reduced, positive
// denominator) as long as everything goes through mpq_class arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text: "n" or "n/d" with d > 0 and gcd(n, d) = 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace qtoda
