#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamari/counting.hpp"
#include "tamari/errors.hpp"
#include "tamari/tseries.hpp"

using namespace tamari;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly Y = Poly::variable(Var::y);
const Poly Q = Poly::variable(Var::q);
Poly xp(int k) { return Poly::variable(Var::x, k); }
Poly yp(int k) { return Poly::variable(Var::y, k); }
}  // namespace

TEST_CASE("divided difference") {
  CHECK(delta_x(X * X) == X + Poly(1L));
  CHECK(delta_x(Poly(7L)).is_zero());
  CHECK(delta_x(X * X * Y) == (X + Poly(1L)) * Y);
  CHECK(delta_x(X.pow(4)) == X.pow(3) + X.pow(2) + X + Poly(1L));
}

TEST_CASE("q divided difference") {
  CHECK(delta_q(X) == Poly(1L));
  CHECK(delta_q(X * X) == Q * X + Poly(1L));
  // At q=1 the two operators agree.
  Poly s = X.pow(3) + X * Rat(2);
  CHECK(delta_q(s).eval(Var::q, Rat(1)) == delta_x(s));
}

TEST_CASE("EGF product convolution") {
  // (sum a_n t^n/n!)^2 with a = (1,1,1,...): e^t * e^t = e^{2t}.
  TSeries e(5);
  for (int n = 0; n <= 5; ++n) e[n] = Poly(1L);
  TSeries sq = tseries_mul(e, e);
  Rat p(1);
  for (int n = 0; n <= 5; ++n) {
    CHECK(sq[n] == Poly(p));
    p *= 2;
  }
}

TEST_CASE("solver reproduces the hand-computed small cases") {
  TSeries F = solve_functional_equation(1, 2);
  CHECK(F[0] == X);
  CHECK(F[1] == xp(2) * yp(1));
  CHECK(F[2] == xp(3) * yp(1) * Rat(2) + xp(3) * yp(2) + xp(2) * yp(2));
  // m=2: the order-t coefficient of the right side is x (x Delta)^2(x) = x^2.
  TSeries F2 = solve_functional_equation(2, 1);
  CHECK(F2[1] == xp(2) * yp(1));
}

TEST_CASE("boundary conditions") {
  TSeries F = solve_functional_equation(2, 4);
  CHECK(F[0] == X);
  for (int n = 1; n <= 4; ++n) CHECK(F[n].eval(Var::y, Rat(0)).is_zero());
}

TEST_CASE("labelled counts from the solver") {
  TSeries F = solve_functional_equation(1, 4);
  CHECK(F[4].eval(Var::x, Rat(1)).eval(Var::y, Rat(1)).constant_value() ==
        Rat(400));
}

TEST_CASE("solver equals the brute-force oracle") {
  for (int m = 1; m <= 3; ++m) {
    int n_max = m == 1 ? 5 : (m == 2 ? 3 : 2);
    TSeries F = solve_functional_equation(m, n_max);
    for (int n = 0; n <= n_max; ++n)
      CHECK(F[n] == refined_polynomial(m, n, false).poly);
  }
}

TEST_CASE("q-solver equals the q-refined oracle") {
  for (int m = 1; m <= 2; ++m) {
    int n_max = m == 1 ? 3 : 2;
    TSeries F = solve_functional_equation(m, n_max, true);
    for (int n = 0; n <= n_max; ++n)
      CHECK(F[n] == refined_polynomial(m, n, true).poly);
  }
}

TEST_CASE("solver uniqueness: longer truncations extend shorter ones") {
  TSeries a = solve_functional_equation(2, 3);
  TSeries b = solve_functional_equation(2, 5);
  for (int n = 0; n <= 3; ++n) CHECK(a[n] == b[n]);
  TSeries aq = solve_functional_equation(1, 3, true);
  TSeries bq = solve_functional_equation(1, 5, true);
  for (int n = 0; n <= 3; ++n) CHECK(aq[n] == bq[n]);
}

TEST_CASE("solver coefficients are nonnegative integer polynomials") {
  TSeries F = solve_functional_equation(2, 4);
  for (int n = 0; n <= 4; ++n)
    for (const auto& [mono, c] : F[n].terms()) {
      CHECK(c > 0);
      CHECK(c.get_den() == 1);
    }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(solve_functional_equation(0, 3), InvalidInput);
  CHECK_THROWS_AS(solve_functional_equation(1, -1), InvalidInput);
}
