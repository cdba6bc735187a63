#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tamari {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// C(n,k), zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Int(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e)
                        : static_cast<unsigned long>(e);
  Rat r(1);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  if (neg) r = Rat(1) / r;
  return r;
}

// Exact decimal string, "p/q" when the denominator is not 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace tamari
