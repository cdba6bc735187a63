#pragma once

#include "tamari/poly.hpp"
#include "tamari/series_util.hpp"
#include "tamari/tseries.hpp"
#include "tamari/urat.hpp"

namespace tamari {

using PolySeries = Series<Poly>;
using URatSeries = Series<URat>;

// Composition with t = z e^{-m(m+1)z}, truncated at z^N.  The input must
// be truncated to at least N.
PolySeries substitute_t_of_z(const TSeries& F, int m, int N);

// Substitute x = (1+u) e^{-mzu}; coefficients become polynomials in u, y.
PolySeries substitute_x_of_zu(const PolySeries& S, int m, int N);

// G(z; u, y) = F(t; x, y) under both substitutions.
PolySeries solver_pipeline(int m, int N);

// Scalar series F(t; 1, 1) composed with t(z).
RatSeries scalar_pipeline_x1y1(int m, int N);

// (1 - mz) e^{(m+1)z}, the closed form of F(t;1,1).
RatSeries closed_form_F11(int m, int N);

// (1+u) e^{(m+1)z - (m-1)zu} (1 + (1 - e^{mzu})/u); the 1/u cancellation
// is asserted.
PolySeries closed_form_G1(int m, int N);

// The two m=1 trivariate closed forms (they must agree with each other
// and with the solver pipeline).
PolySeries closed_form_m1_double_sum(int N);
PolySeries closed_form_m1_upos(int N);

// Coefficientwise check of the transformed functional equation
//   dG/dy = z(1+u) e^{-mzu - m(m+1)z} (u G(u,1) / ((1+u)e^{-mzu} - 1) .
//           Delta_u)^(m) G(u,y)
// against the pipeline output; returns the first failing z-order, or -1.
int eq_g_first_mismatch(int m, int N);

// Conversions between coefficient rings.
URatSeries to_urat_series(const PolySeries& s);
PolySeries assert_polynomial_u(const URatSeries& s);  // throws AlgebraError
PolySeries assert_laurent_u(const URatSeries& s);     // throws AlgebraError

}  // namespace tamari
