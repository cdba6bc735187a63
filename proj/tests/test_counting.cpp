#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamari/counting.hpp"

using namespace tamari;

namespace {
Poly xp(int k) { return Poly::variable(Var::x, k); }
Poly yp(int k) { return Poly::variable(Var::y, k); }
}  // namespace

TEST_CASE("closed form for unlabelled interval counts") {
  CHECK(closed_unlabelled(1, 1) == 1);
  CHECK(closed_unlabelled(1, 2) == 3);
  CHECK(closed_unlabelled(1, 3) == 13);
  CHECK(closed_unlabelled(1, 4) == 68);
  CHECK(closed_unlabelled(2, 1) == 1);
  CHECK(closed_unlabelled(2, 2) == 6);
  CHECK(closed_unlabelled(2, 3) == 58);
  CHECK(closed_unlabelled(3, 1) == 1);
  CHECK(closed_unlabelled(3, 2) == 10);
  CHECK(closed_unlabelled(2, 0) == 1);
}

TEST_CASE("closed form for labelled interval counts") {
  CHECK(closed_labelled(1, 1) == 1);  // exponent n-2 is negative here
  CHECK(closed_labelled(2, 1) == 1);
  CHECK(closed_labelled(5, 1) == 1);
  CHECK(closed_labelled(1, 2) == 4);
  CHECK(closed_labelled(1, 3) == 32);
  CHECK(closed_labelled(1, 4) == 400);
  CHECK(closed_labelled(2, 2) == 9);
  CHECK(closed_labelled(2, 3) == 189);
  CHECK(closed_labelled(3, 2) == 16);
}

TEST_CASE("brute force agrees with both closed forms") {
  for (int m = 1; m <= 3; ++m) {
    int n_max = m == 1 ? 5 : (m == 2 ? 3 : 2);
    for (int n = 1; n <= n_max; ++n) {
      TamariPoset t = TamariPoset::build(m, n);
      auto intervals = enumerate_intervals(t);
      CHECK(Int(intervals.size()) == closed_unlabelled(m, n));
      Int labelled(0);
      for (const Interval& iv : intervals)
        labelled += labellings_count(t.vertex(iv.upper));
      CHECK(labelled == closed_labelled(m, n));
    }
  }
}

TEST_CASE("refined polynomials, hand-enumerated cases") {
  // n=1: the unique interval [NE,NE] has c=2, r=1.
  CHECK(refined_polynomial(1, 1, false).poly == xp(2) * yp(1));
  // n=2: [NENE,NENE] twice labelled, [NENE,NNEE], [NNEE,NNEE].
  CHECK(refined_polynomial(1, 2, false).poly ==
        xp(3) * yp(1) * Rat(2) + xp(3) * yp(2) + xp(2) * yp(2));
  // size 0 contributes x.
  CHECK(refined_polynomial(1, 0, false).poly == xp(1));
  CHECK(refined_polynomial(3, 0, false).poly == xp(1));
  // m=2, n=2: the lattice is the chain NEENEE < NENEEE < NNEEEE.
  CHECK(refined_polynomial(2, 2, false).poly ==
        xp(3) * yp(1) * Rat(4) + xp(3) * yp(2) + xp(2) * yp(1) * Rat(2) +
            xp(2) * yp(2) * Rat(2));
}

TEST_CASE("refined polynomial global properties") {
  for (int m = 1; m <= 3; ++m) {
    int n_max = m == 1 ? 5 : (m == 2 ? 3 : 2);
    for (int n = 0; n <= n_max; ++n) {
      RefinedCount rc = refined_polynomial(m, n, false);
      // poly(1,1) = labelled count; #terms' support bounded.
      CHECK(rc.poly.eval(Var::x, Rat(1)).eval(Var::y, Rat(1)).constant_value() ==
            Rat(closed_labelled(m, n)));
      CHECK(rc.poly.degree(Var::x) <= n + 1);
      CHECK(rc.poly.degree(Var::y) <= n);
      for (const auto& [mono, c] : rc.poly.terms()) {
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("q refinement collapses at q=1") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n) {
      RefinedCount with_q = refined_polynomial(m, n, true);
      RefinedCount plain = refined_polynomial(m, n, false);
      CHECK(with_q.poly.eval(Var::q, Rat(1)) == plain.poly);
    }
}

TEST_CASE("q refinement of T_2: three intervals, one covering step") {
  Poly p = refined_polynomial(1, 2, true).poly;
  CHECK(p.eval(Var::x, Rat(1)).eval(Var::y, Rat(1)) ==
        Poly(3L) + Poly::variable(Var::q));
}
