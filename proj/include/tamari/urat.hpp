#pragma once

#include <string>

#include "tamari/poly.hpp"

namespace tamari {

// Rational function in u.  The numerator may involve further variables
// (y mostly); the denominator is a monic univariate polynomial in u.
// Normal form: gcd-reduced, denominator monic, no negative exponents.
class URat {
 public:
  URat() = default;
  URat(const Poly& num, const Poly& den);
  explicit URat(const Poly& num) : num_(num), den_(Poly(1L)) {}
  explicit URat(const Rat& c) : num_(Poly(c)), den_(Poly(1L)) {}
  explicit URat(long c) : num_(Poly(c)), den_(Poly(1L)) {}

  static URat u_power(int k);  // u^k, k may be negative
  // Fold the u^{-a} part of a Laurent polynomial into the denominator.
  static URat from_laurent(const Poly& laurent);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  URat operator+(const URat& o) const;
  URat operator-(const URat& o) const;
  URat operator-() const;
  URat operator*(const URat& o) const;
  URat operator*(const Rat& c) const;
  URat operator/(const URat& o) const;
  URat inverse() const;  // numerator must be univariate in u
  URat pow(int n) const;

  bool operator==(const URat& o) const;
  bool operator!=(const URat& o) const { return !(*this == o); }

  bool is_polynomial() const { return den_.is_constant(); }
  Poly to_poly() const;  // requires is_polynomial()
  // Laurent polynomial in u: denominator must be a power of u.
  bool is_laurent() const;
  Poly to_laurent() const;

  // Substitute u -> value; the denominator must not vanish there.
  Poly eval_u(const Rat& value) const;
  Poly at_u0() const { return eval_u(Rat(0)); }
  // Substitute u -> 1/u.
  URat conjugate() const;
  // Minimal u-exponent when viewed as a Laurent series at u = 0.
  int valuation_u() const;

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_ = Poly(1L);
};

inline URat operator*(const Rat& c, const URat& r) { return r * c; }

inline URat ring_one(const URat&) { return URat(1L); }
inline URat ring_inverse(const URat& a) { return a.inverse(); }

// Univariate helpers over Q[u], used by URat and the symmetric machinery.
Poly upoly_gcd(const Poly& a, const Poly& b);
// Exact division of p (any variables) by a univariate-in-u divisor;
// throws AlgebraError if a remainder is left.
Poly upoly_divide_exact(const Poly& p, const Poly& divisor);

}  // namespace tamari
