#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "tamari/rational.hpp"

namespace tamari {

// Variable universe shared by every polynomial in the project.  x, y, q
// live on the t-series side; u, v on the z-series side.
enum class Var : int { x = 0, y = 1, q = 2, u = 3, v = 4 };
inline constexpr int kVarCount = 5;
inline constexpr std::array<char, kVarCount> kVarNames = {'x', 'y', 'q', 'u',
                                                          'v'};

struct Mono {
  std::array<int16_t, kVarCount> e{};

  auto operator<=>(const Mono&) const = default;
  bool is_one() const {
    for (int16_t k : e)
      if (k != 0) return false;
    return true;
  }
  Mono times(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kVarCount; ++i)
      r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
};

// Sparse exact-rational polynomial; exponents may be negative (Laurent),
// which only the u variable actually uses.  Canonical form: no zero
// coefficients stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c);
  static Poly variable(Var w, int exp = 1);
  static Poly term(const Rat& c, Var w, int exp);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  Rat constant_term() const;   // coefficient of the empty monomial
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o);
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;
  Poly pow(int n) const;  // n >= 0

  // Largest / smallest exponent of w among terms; {0,0} for the zero poly.
  int degree(Var w) const;
  int low_degree(Var w) const;
  bool depends_on(Var w) const;
  bool has_negative_exponent(Var w) const { return low_degree(w) < 0; }
  bool has_negative_exponent() const;

  Poly derivative(Var w) const;
  // Antiderivative in y with value 0 at y = 0.
  Poly antiderivative_y() const;

  // Substitute a rational value for w (value must be nonzero if negative
  // exponents of w are present).
  Poly eval(Var w, const Rat& value) const;
  // Substitute a polynomial for w.  Negative exponents of w require p to
  // be a single invertible term.
  Poly substitute(Var w, const Poly& p) const;
  // Coefficient of w^k, as a polynomial in the remaining variables.
  Poly coeff_of(Var w, int k) const;
  std::map<int, Poly> collect(Var w) const;

  // Laurent truncations in u.
  Poly positive_part_u() const;
  Poly nonneg_part_u() const;

  // Multiply every exponent of w by -1 (substitution w -> 1/w).
  Poly invert_var(Var w) const;
  // Multiply by w^k.
  Poly shift(Var w, int k) const;

  std::string to_string() const;

  const std::map<Mono, Rat>& terms() const { return terms_; }
  void add_term(const Mono& m, const Rat& c);

 private:
  std::map<Mono, Rat> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

inline Poly ring_one(const Poly&) { return Poly(1L); }
// Only constants are invertible; enough for series with unit leading term.
Poly ring_inverse(const Poly& p);

}  // namespace tamari
