#pragma once

#include <string>
#include <vector>

#include "tamari/sym.hpp"

namespace tamari {

struct CheckReport {
  std::string name;
  int m = 0;
  int N = 0;
  bool pass = false;
  int first_mismatch_order = -1;  // z-order or n, -1 when clean
  std::string detail;
};

// Op-level identity verifiers -------------------------------------------

// Lambda iteration lemma: Lambda^k H == A^{-k} (H - sum_{j<k} g_j A^j)
// with g_j = Lambda^j H at u=0; returns the first failing k, or -1.
int lambda_expansion_first_mismatch(const URatSeries& H, int k_max);

// The three Lagrange identities at sample points xs (pairwise distinct,
// nonzero) with Q given by its coefficient list, deg Q < |xs| - 1.
bool lagrange_identities_hold(const std::vector<Rat>& xs,
                              const std::vector<Rat>& q_coeffs);

// Check-report wrappers --------------------------------------------------

CheckReport check_sublattice(int m, int n);
CheckReport check_decomposition(int n_max);
CheckReport check_solver_oracle(int m, int n_max, int q_n_max);
CheckReport check_theorem_main(int m, int N);
CheckReport check_theorem_m1(int N);
CheckReport check_trivariate(int m, int N);
CheckReport check_lambda_lemma(int m, int N, int k_max);
CheckReport check_lagrange(int m_max, int trials, unsigned seed);
CheckReport check_combi_lin(int m, int N);  // m = 1 or 2
CheckReport check_g1_identity(int m, int N);
CheckReport check_q_specialization(int m, int n_max);
CheckReport check_eq_g(int m, int N);

}  // namespace tamari
