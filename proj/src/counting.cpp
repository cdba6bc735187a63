#include "tamari/counting.hpp"

#include "tamari/errors.hpp"

namespace tamari {

Int closed_unlabelled(int m, int n) {
  if (n < 0) throw InvalidInput("closed_unlabelled: n must be >= 0");
  if (n == 0) return Int(1);
  Int num = Int(m + 1) * binomial(static_cast<long>(m + 1) * (m + 1) * n + m,
                                  static_cast<long>(n) - 1);
  Int den = Int(n) * Int(static_cast<long>(m) * n + 1);
  Rat r = make_rat(num, den);
  if (r.get_den() != 1)
    throw AlgebraError("closed_unlabelled: value is not an integer");
  return r.get_num();
}

Int closed_labelled(int m, int n) {
  if (n < 0) throw InvalidInput("closed_labelled: n must be >= 0");
  if (n == 0) return Int(1);
  Rat r = rat_pow(Rat(m + 1), n) *
          rat_pow(Rat(static_cast<long>(m) * n + 1), static_cast<long>(n) - 2);
  if (r.get_den() != 1)
    throw AlgebraError("closed_labelled: value is not an integer");
  return r.get_num();
}

RefinedCount refined_polynomial(int m, int n, bool with_q,
                                const TamariPoset* poset) {
  RefinedCount rc;
  rc.m = m;
  rc.n = n;
  if (n == 0) {
    rc.poly = Poly::variable(Var::x);  // the size-0 interval: one contact
    return rc;
  }
  TamariPoset local = poset ? TamariPoset() : TamariPoset::build(m, n);
  const TamariPoset& ts = poset ? *poset : local;
  for (const Interval& iv : enumerate_intervals(ts)) {
    Rat weight(labellings_count(ts.vertex(iv.upper)));
    Poly term = Poly::term(weight, Var::x, iv.contacts) *
                Poly::variable(Var::y, iv.rise);
    if (with_q) term *= Poly::variable(Var::q, iv.dist);
    rc.poly += term;
  }
  return rc;
}

}  // namespace tamari
