#pragma once

#include "tamari/poly.hpp"
#include "tamari/tamari.hpp"

namespace tamari {

// (m+1) / (n(mn+1)) * C((m+1)^2 n + m, n-1); exact, 1 for n = 0.
Int closed_unlabelled(int m, int n);
// (m+1)^n (mn+1)^{n-2}; evaluated in rational arithmetic so that the
// negative exponent at n = 1 works out; 1 for n = 0.
Int closed_labelled(int m, int n);

// Brute-force refined count over all intervals of T_n^(m):
//   sum labellings(Q) * x^{c(P)} y^{r(Q)} (* q^{dist(P,Q)}).
struct RefinedCount {
  int m = 1, n = 0;
  Poly poly;
};

RefinedCount refined_polynomial(int m, int n, bool with_q,
                                const TamariPoset* poset = nullptr);

}  // namespace tamari
