#pragma once

// Small helpers around GMP rationals: parsing, printing, canonical mod-1
// representatives, integer powers.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cremona {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_int(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

// Representative of q + Z in [0, 1).
inline Rat mod1(const Rat& q) {
  Rat r = q - Rat(floor_int(q));
  r.canonicalize();
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow_rat: 0 to a negative power");
    Rat inv = 1 / base;
    return pow_rat(inv, -e);
  }
  Rat acc = 1, b = base;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b *= b;
  }
  return acc;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace cremona
