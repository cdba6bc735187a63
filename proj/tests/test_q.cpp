#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamari/checks.hpp"
#include "tamari/counting.hpp"
#include "tamari/tseries.hpp"

using namespace tamari;

TEST_CASE("q specialization report") {
  for (int m = 1; m <= 2; ++m) {
    CheckReport r = check_q_specialization(m, 3);
    CHECK(r.pass);
    CHECK(!r.detail.empty());  // the coefficient table is reported
  }
}

TEST_CASE("T_2 coefficient at x=y=1 is 3+q") {
  TSeries F = solve_functional_equation(1, 2, true);
  Poly p = F[2].eval(Var::x, Rat(1)).eval(Var::y, Rat(1));
  CHECK(p == Poly(3L) + Poly::variable(Var::q));
}

TEST_CASE("q-degree equals the longest chain, small sweep") {
  for (int m = 1; m <= 2; ++m) {
    int n_max = 3;
    TSeries F = solve_functional_equation(m, n_max, true);
    for (int n = 1; n <= n_max; ++n) {
      TamariPoset t = TamariPoset::build(m, n);
      int maxdist = 0;
      for (const Interval& iv : enumerate_intervals(t))
        maxdist = std::max(maxdist, iv.dist);
      CHECK(F[n].degree(Var::q) == maxdist);
    }
  }
}

TEST_CASE("q-refined oracle equality for deeper m=1") {
  TSeries F = solve_functional_equation(1, 4, true);
  for (int n = 0; n <= 4; ++n)
    CHECK(F[n] == refined_polynomial(1, n, true).poly);
}
