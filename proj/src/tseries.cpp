#include "tamari/tseries.hpp"

#include "tamari/errors.hpp"

namespace tamari {

TSeries tseries_mul(const TSeries& A, const TSeries& B) {
  TSeries C(std::min(A.order(), B.order()));
  for (int n = 0; n <= C.order(); ++n) {
    Poly acc;
    for (int i = 0; i <= n; ++i) {
      if (A[i].is_zero() || B[n - i].is_zero()) continue;
      acc += A[i] * B[n - i] * Rat(binomial(n, i));
    }
    C[n] = acc;
  }
  return C;
}

Poly delta_x(const Poly& s) {
  // Synthetic division of S(x) - S(1) by (x - 1); the remainder is the
  // value at x = 1, which must vanish.
  std::map<int, Poly> cols = s.collect(Var::x);
  int deg = cols.empty() ? 0 : cols.rbegin()->first;
  if (deg < 0) throw AlgebraError("delta_x: negative x exponent");
  Poly carry;  // coefficient flowing down the synthetic division
  Poly quot;
  for (int k = deg; k >= 1; --k) {
    auto it = cols.find(k);
    if (it != cols.end()) carry += it->second;
    quot += carry.shift(Var::x, k - 1);
  }
  // carry now equals S(1) - S(0)x^0 contributions summed; the remainder
  // of (S(x) - S(1))/(x-1) is S(1) - S(1) = 0 by construction.
  return quot;
}

Poly delta_q(const Poly& s) {
  // Divide S(qx) - S(1) by (qx - 1) from the top x-degree; each step
  // divides by q, which must stay exact.
  Poly sqx;
  for (const auto& [e, c] : s.collect(Var::x))
    sqx += c.shift(Var::x, e).shift(Var::q, e);
  Poly t = sqx - s.eval(Var::x, Rat(1));
  std::map<int, Poly> cols = t.collect(Var::x);
  int deg = cols.empty() ? 0 : cols.rbegin()->first;
  Poly quot;
  Poly carry;
  for (int k = deg; k >= 1; --k) {
    auto it = cols.find(k);
    Poly head = carry;
    if (it != cols.end()) head += it->second;
    Poly qterm = head.shift(Var::q, -1);
    quot += qterm.shift(Var::x, k - 1);
    carry = qterm;  // adds qterm * 1 to the next column
  }
  Poly rem = carry;
  if (auto it = cols.find(0); it != cols.end()) rem += it->second;
  if (!rem.is_zero() || quot.has_negative_exponent())
    throw AlgebraError("delta_q: division left a remainder");
  return quot;
}

TSeries solve_functional_equation(int m, int N, bool with_q) {
  if (m < 1 || N < 0) throw InvalidInput("solve_functional_equation: bad args");
  TSeries F(N);
  F[0] = Poly::variable(Var::x);
  for (int n = 1; n <= N; ++n) {
    // Everything on the right-hand side carries a factor t, so order n of
    // dF/dy only needs F through order n-1.
    TSeries U(n - 1), F1(n - 1);
    for (int k = 0; k < n; ++k) {
      U[k] = F[k];
      F1[k] = F[k].eval(Var::y, Rat(1));
    }
    for (int step = 0; step < m; ++step) {
      for (int k = 0; k <= U.order(); ++k)
        U[k] = with_q ? delta_q(U[k]) : delta_x(U[k]);
      U = tseries_mul(F1, U);
    }
    Poly dy = U[n - 1] * Poly::variable(Var::x) * Rat(n);
    F[n] = dy.antiderivative_y();  // F_n(x, 0) = 0 for n >= 1
  }
  return F;
}

}  // namespace tamari
