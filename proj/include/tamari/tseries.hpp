#pragma once

#include <vector>

#include "tamari/poly.hpp"

namespace tamari {

// Truncated exponential series in t: a[n] = n! [t^n] F, a polynomial in
// x, y (and q for the distance-refined variant).  Storing n![t^n]F keeps
// every coefficient an integer polynomial; products are binomial
// convolutions.
struct TSeries {
  std::vector<Poly> a;

  TSeries() = default;
  explicit TSeries(int order) : a(static_cast<std::size_t>(order) + 1) {}
  int order() const { return static_cast<int>(a.size()) - 1; }
  const Poly& operator[](int n) const { return a[static_cast<std::size_t>(n)]; }
  Poly& operator[](int n) { return a[static_cast<std::size_t>(n)]; }
  bool operator==(const TSeries& o) const = default;
};

TSeries tseries_mul(const TSeries& A, const TSeries& B);

// Divided difference (S(x) - S(1)) / (x - 1), exact division.
Poly delta_x(const Poly& s);
// q-analogue (S(qx) - S(1)) / (qx - 1), exact division.
Poly delta_q(const Poly& s);

// Unique EGF solution of  dF/dy = t x (F(x,1) Delta)^(m) F(x,y)  with
// F(x,0) = x; with_q swaps Delta for its q-analogue.  Coefficient n
// equals the brute-force refined polynomial of T_n^(m).
TSeries solve_functional_equation(int m, int N, bool with_q = false);

}  // namespace tamari
