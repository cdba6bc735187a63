#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamari/checks.hpp"
#include "tamari/errors.hpp"
#include "tamari/zpipeline.hpp"

using namespace tamari;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly U = Poly::variable(Var::u);

PolySeries direct_t_of_z(int m, int N) {
  // z e^{-m(m+1)z} expanded by hand.
  PolySeries s(N);
  Rat pw(1);
  for (int k = 1; k <= N; ++k) {
    s[k] = Poly(pw / Rat(factorial(static_cast<unsigned long>(k - 1))));
    pw *= Rat(static_cast<long>(-m) * (m + 1));
  }
  return s;
}
}  // namespace

TEST_CASE("t substitution of the identity series") {
  // F = t means a_1 = 1 and everything else 0.
  for (int m = 1; m <= 3; ++m) {
    TSeries F(6);
    F[1] = Poly(1L);
    CHECK(substitute_t_of_z(F, m, 6) == direct_t_of_z(m, 6));
  }
  // Constant series are unchanged.
  TSeries c(4);
  c[0] = X * X;
  PolySeries s = substitute_t_of_z(c, 2, 4);
  CHECK(s[0] == X * X);
  for (int k = 1; k <= 4; ++k) CHECK(s[k].is_zero());
}

TEST_CASE("x substitution basics") {
  // x -> (1+u) e^{-mzu}.
  PolySeries input(5);
  input[0] = X;
  for (int m = 1; m <= 2; ++m) {
    PolySeries out = substitute_x_of_zu(input, m, 5);
    PolySeries expect =
        scale(series_exp_linear(Poly::term(Rat(-m), Var::u, 1), 5),
              Poly(1L) + U);
    CHECK(out == expect);
  }
}

TEST_CASE("pipeline initial condition G(u,0) = (1+u)e^{-mzu}") {
  for (int m = 1; m <= 3; ++m) {
    PolySeries G = solver_pipeline(m, 5);
    PolySeries expect =
        scale(series_exp_linear(Poly::term(Rat(-m), Var::u, 1), 5),
              Poly(1L) + U);
    for (int k = 0; k <= 5; ++k)
      CHECK(G[k].eval(Var::y, Rat(0)) == expect[k]);
  }
}

TEST_CASE("product of both substitutions matches direct expansion") {
  // F = t*x as an EGF: a_1 = x.
  TSeries F(5);
  F[1] = X;
  for (int m = 1; m <= 2; ++m) {
    PolySeries via = substitute_x_of_zu(substitute_t_of_z(F, m, 5), m, 5);
    // z e^{-m(m+1)z} (1+u) e^{-mzu} expanded directly.
    PolySeries direct =
        scale(series_exp_linear(Poly::term(Rat(-m), Var::u, 1) +
                                    Poly(static_cast<long>(-m) * (m + 1)),
                                5),
              Poly(1L) + U)
            .shift_z(1);
    CHECK(via == direct);
  }
}

TEST_CASE("closed form G1 basics") {
  for (int m = 1; m <= 3; ++m) {
    PolySeries g1 = closed_form_G1(m, 6);
    CHECK(g1[0] == Poly(1L) + U);  // constant term 1+u
    // u -> 0 limit gives (1-mz) e^{(m+1)z}.
    RatSeries f11 = closed_form_F11(m, 6);
    for (int k = 0; k <= 6; ++k)
      CHECK(g1[k].eval(Var::u, Rat(0)).constant_value() == f11[k]);
  }
}

TEST_CASE("theorem: pipeline at y=1 equals G1") {
  for (int m = 1; m <= 3; ++m) {
    CheckReport r = check_theorem_main(m, 6);
    CHECK(r.pass);
  }
}

TEST_CASE("scalar pipeline equals (1-mz)e^{(m+1)z}") {
  for (int m = 1; m <= 3; ++m)
    CHECK(scalar_pipeline_x1y1(m, 8) == closed_form_F11(m, 8));
}

TEST_CASE("m=1 trivariate closed forms") {
  PolySeries dsum = closed_form_m1_double_sum(6);
  PolySeries upos = closed_form_m1_upos(6);
  CHECK(dsum == upos);
  PolySeries pipe = solver_pipeline(1, 6);
  CHECK(pipe == dsum);
  // y=1 specialization reduces to the m=1 case of G1.
  PolySeries g1 = closed_form_G1(1, 6);
  for (int k = 0; k <= 6; ++k)
    CHECK(dsum[k].eval(Var::y, Rat(1)) == g1[k]);
}

TEST_CASE("m=1 trivariate at u=0: Bessel-type simple sums") {
  PolySeries dsum = closed_form_m1_double_sum(8);
  // F(t;1,y)/e^{2yz} = sum_i z^{2i} y^i(y-1)^i / i!^2
  //                  - sum_j z^{2j+1} y^{j+1}(y-1)^j / ((j+1)! j!).
  Poly y = Poly::variable(Var::y);
  PolySeries bess(8);
  for (int i = 0; 2 * i <= 8; ++i) {
    Rat c = Rat(1) / Rat(factorial(static_cast<unsigned long>(i)) *
                         factorial(static_cast<unsigned long>(i)));
    bess[2 * i] += y.pow(i) * (y - Poly(1L)).pow(i) * c;
  }
  for (int j = 0; 2 * j + 1 <= 8; ++j) {
    Rat c = Rat(1) / Rat(factorial(static_cast<unsigned long>(j + 1)) *
                         factorial(static_cast<unsigned long>(j)));
    bess[2 * j + 1] -= y.pow(j + 1) * (y - Poly(1L)).pow(j) * c;
  }
  PolySeries expect = bess * series_exp_linear(y * Rat(2), 8);
  for (int k = 0; k <= 8; ++k)
    CHECK(dsum[k].eval(Var::u, Rat(0)) == expect[k]);
}

TEST_CASE("transformed functional equation holds for the pipeline") {
  for (int m = 1; m <= 3; ++m) CHECK(eq_g_first_mismatch(m, 6) == -1);
}

TEST_CASE("insufficient truncation is rejected") {
  TSeries F(3);
  CHECK_THROWS_AS(substitute_t_of_z(F, 1, 5), InvalidInput);
  PolySeries s(3);
  CHECK_THROWS_AS(substitute_x_of_zu(s, 1, 5), InvalidInput);
}
