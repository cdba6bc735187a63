#pragma once

#include <map>
#include <vector>

#include "tamari/poly.hpp"
#include "tamari/urat.hpp"
#include "tamari/zpipeline.hpp"

namespace tamari {

// ---------------------------------------------------------------------
// Symmetric functions of the roots of (1+U)^{m+1} = U^m v.
//
// u_0 = u, u_1, ..., u_m are never represented explicitly: every
// root-involving expression is reduced through the elementary symmetric
// functions, which are a polynomial in v (all roots) or a Laurent
// polynomial in u (the roots other than u itself).
// ---------------------------------------------------------------------

// v = (1+u)^{m+1} u^{-m} as a Laurent polynomial in u.
Poly v_of_u(int m);
// Substitute v -> v(u) (exponents of v must be nonnegative).
Poly subst_v(const Poly& p, int m);
// v^{-k} as a rational function of u.
URat v_inverse_power(int m, int k);

struct SymContext {
  int m = 1;
  int window = 0;              // power sums available for |k| <= window
  std::vector<Poly> e_all;     // e_j(u_0..u_m), Poly in v, j = 0..m+1
  std::vector<Poly> e_oth;     // e_j(u_1..u_m), Laurent Poly in u, j = 0..m
  std::map<int, Poly> p_all;   // power sums of all roots, Poly in v
  std::map<int, Poly> p_oth;   // power sums of the other roots, Laurent

  static SymContext build(int m, int window);
  // A fresh context with a larger window (contexts stay immutable).
  SymContext with_window(int bigger) const;

  const Poly& pow_all(int k) const;  // throws AlgebraError outside window
  const Poly& pow_oth(int k) const;
  Poly prod_one_plus_roots() const;  // prod (1+u_i), evaluates to v
  Rat prod_roots() const;            // prod u_i = (-1)^{m+1}
};

// ---------------------------------------------------------------------
// A(u) = u/(1+u) e^{-zu} and the Lambda operator.
// ---------------------------------------------------------------------

URatSeries A_of(const URat& w, int N);
// Lambda(H)(u) = (H(u) - H(0)) / A(u); coefficients of H must be finite
// at u = 0.
URatSeries lambda_op(const URatSeries& H);
// Per-coefficient value at u = 0 (the series g_j of the Lambda lemma).
PolySeries at_u0(const URatSeries& H);

// ---------------------------------------------------------------------
// Partitions and monomial symmetric functions of A(u_1), ..., A(u_m).
// ---------------------------------------------------------------------

using Partition = std::vector<int>;  // weakly decreasing positive parts
std::vector<Partition> partitions_of(int w);

// sum_{i=1..m} A(u_i)^r, reduced through the power-sum tables.
URatSeries a_power_sum_others(const SymContext& ctx, int r, int N);
// m_lambda(A(u_1), ..., A(u_m)).
URatSeries monomial_sym_A(const SymContext& ctx, const Partition& lambda,
                          int N);

// The unique polynomial Q with Q(v(u)) = L; throws AlgebraError when L is
// not a polynomial in v.
Poly laurent_to_v(const Poly& L, int m);

// ---------------------------------------------------------------------
// The positive-part extraction recursion for the trivariate series.
// ---------------------------------------------------------------------

struct PhiTable {
  int m = 1;
  int N = 0;
  // phi[k] is a z-series with coefficients in v*K[v] (polynomials in v
  // and y with zero constant term in v).
  std::vector<PolySeries> phi;
};

// Phi_m(v) = v e^{zyv}; descending recursion for Phi_{m-1}, ..., Phi_0.
PhiTable phi_recursion(int m, int N);

// F = sum_k Phi_k(v) A(u)^k; the coefficients must come out polynomial in
// u and y (denominator cancellation is asserted).
PolySeries assemble_F(const PhiTable& table, int N);

// ---------------------------------------------------------------------
// Quadratic extension Q(u)[s]/(s^2 - (1+4u)) for the explicit m=2 roots
// u_{1,2} = (1+3u +- (1+u) s) / (2u^2): an independent representation
// guarding the symmetric-reduction path.
// ---------------------------------------------------------------------

struct Ext2 {
  URat a, b;  // a + b*s

  Ext2() = default;
  explicit Ext2(const URat& a_) : a(a_) {}
  Ext2(const URat& a_, const URat& b_) : a(a_), b(b_) {}

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  Ext2 operator+(const Ext2& o) const { return {a + o.a, b + o.b}; }
  Ext2 operator-(const Ext2& o) const { return {a - o.a, b - o.b}; }
  Ext2 operator-() const { return {-a, -b}; }
  Ext2 operator*(const Ext2& o) const;
  Ext2 operator*(const Rat& c) const { return {a * c, b * c}; }
  Ext2 inverse() const;
  bool operator==(const Ext2& o) const { return a == o.a && b == o.b; }
};

inline Ext2 ring_one(const Ext2&) { return Ext2(URat(1L)); }
inline Ext2 ring_inverse(const Ext2& e) { return e.inverse(); }

using Ext2Series = Series<Ext2>;

// The m=2 roots; sign = +1 or -1.
Ext2 ext2_root_m2(int sign);
// Substitute u -> w into a polynomial in u (and y).
Ext2 ext2_eval_poly(const Poly& p, const Ext2& w);
Ext2Series A_of_ext(const Ext2& w, int N);

}  // namespace tamari
