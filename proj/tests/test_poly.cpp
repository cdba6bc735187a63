#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamari/poly.hpp"
#include "tamari/series_util.hpp"
#include "tamari/urat.hpp"

using namespace tamari;

namespace {
const Poly X = Poly::variable(Var::x);
const Poly Y = Poly::variable(Var::y);
const Poly U = Poly::variable(Var::u);
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Poly p = X * X + Y * Rat(2);
  Poly q = X - Poly(1L);
  CHECK((p + q) - q == p);
  CHECK(p * q == q * p);
  CHECK((p * q).degree(Var::x) == 3);
  CHECK(p.pow(0) == Poly(1L));
  CHECK(p.pow(3) == p * p * p);
  CHECK((p - p).is_zero());
}

TEST_CASE("canonical form drops zero coefficients") {
  Poly p = X + (-X);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  Poly q = X * Rat(3) + X * Rat(-3) + Y;
  CHECK(q == Y);
}

TEST_CASE("laurent exponents and parts") {
  Poly p = Poly::variable(Var::u, 2) + Poly(3L) + Poly::variable(Var::u, -1);
  CHECK(p.degree(Var::u) == 2);
  CHECK(p.low_degree(Var::u) == -1);
  CHECK(p.positive_part_u() == Poly::variable(Var::u, 2));
  CHECK(p.nonneg_part_u() == Poly::variable(Var::u, 2) + Poly(3L));
  // [u^>=] = [u^>] + [u^0]
  CHECK(p.nonneg_part_u() == p.positive_part_u() + p.coeff_of(Var::u, 0));
  CHECK(p.invert_var(Var::u) == Poly::variable(Var::u, -2) + Poly(3L) + U);
}

TEST_CASE("substitution and evaluation") {
  Poly p = X * X * Y + X;
  CHECK(p.eval(Var::x, Rat(2)) == Y * Rat(4) + Poly(2L));
  CHECK(p.substitute(Var::x, Y) == Y * Y * Y + Y);
  // Negative exponents need an invertible monomial.
  Poly lau = Poly::variable(Var::u, -2);
  CHECK(lau.substitute(Var::u, Poly::variable(Var::v)) ==
        Poly::variable(Var::v, -2));
  CHECK(lau.eval(Var::u, Rat(1, 2)) == Poly(4L));
}

TEST_CASE("derivative and y-antiderivative") {
  Poly p = Y * Y * X + Y * Rat(3);
  CHECK(p.derivative(Var::y) == Y * X * Rat(2) + Poly(3L));
  CHECK(p.derivative(Var::y).antiderivative_y() == p);
  CHECK(Poly(5L).antiderivative_y() == Y * Rat(5));
}

TEST_CASE("series multiplication and inverse") {
  // (1 - z)^-1 = 1 + z + z^2 + ...
  Series<Rat> s(5);
  s[0] = Rat(1);
  s[1] = Rat(-1);
  Series<Rat> inv = series_inverse(s);
  for (int k = 0; k <= 5; ++k) CHECK(inv[k] == Rat(1));
  CHECK((s * inv)[0] == Rat(1));
  for (int k = 1; k <= 5; ++k) CHECK((s * inv)[k] == Rat(0));
}

TEST_CASE("series exp of a linear argument") {
  // e^{2z}: coefficients 2^k / k!.
  Series<Rat> e = series_exp_linear(Rat(2), 6);
  Rat f(1);
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) f *= Rat(2) / Rat(k);
    CHECK(e[k] == f);
  }
}

TEST_CASE("urat normalization") {
  // (u^2 - 1) / (u - 1) reduces to u + 1.
  URat r(U * U - Poly(1L), U - Poly(1L));
  CHECK(r.is_polynomial());
  CHECK(r.to_poly() == U + Poly(1L));
  // Monic denominators.
  URat s(Poly(1L), U * Rat(2) + Poly(2L));
  CHECK(s.den() == U + Poly(1L));
  CHECK(s.num() == Poly(Rat(1, 2)));
}

TEST_CASE("urat arithmetic and laurent fold") {
  URat a = URat::u_power(-2);  // 1/u^2
  URat b = URat::u_power(3);
  CHECK((a * b).to_laurent() == U);
  CHECK(a.is_laurent());
  URat c = URat(Poly(1L), U + Poly(1L));  // 1/(1+u)
  CHECK(!c.is_laurent());
  CHECK((c * URat(U + Poly(1L))) == URat(1L));
  // y stays in numerators.
  URat d = URat(Y * U, (U + Poly(1L)) * (U + Poly(1L)));
  URat e = d * URat(U + Poly(1L)) * URat(U + Poly(1L));
  CHECK(e == URat(Y * U));
  CHECK_THROWS(URat(Y).inverse());
}

TEST_CASE("urat conjugate u -> 1/u") {
  URat a(U * U + Poly(1L), U + Poly(2L));  // (u^2+1)/(u+2)
  URat conj = a.conjugate();
  // Substituting u = 1/3 into the conjugate equals a at u = 3.
  CHECK(conj.eval_u(Rat(1, 3)) == a.eval_u(Rat(3)));
  CHECK(URat::from_laurent(U + Poly::variable(Var::u, -1)).conjugate() ==
        URat::from_laurent(U + Poly::variable(Var::u, -1)));
}

TEST_CASE("upoly division detects remainders") {
  CHECK(upoly_divide_exact(U * U - Poly(1L), U - Poly(1L)) == U + Poly(1L));
  CHECK_THROWS(upoly_divide_exact(U * U, U - Poly(1L)));
  CHECK(upoly_gcd(U * U - Poly(1L), U * U + U * Rat(2) + Poly(1L)) ==
        U + Poly(1L));
}
