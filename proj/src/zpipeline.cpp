#include "tamari/zpipeline.hpp"

#include "tamari/errors.hpp"

namespace tamari {

namespace {

const Poly kU = Poly::variable(Var::u);
const Poly kY = Poly::variable(Var::y);

Poly one_plus_u() { return Poly(1L) + Poly::variable(Var::u); }

}  // namespace

PolySeries substitute_t_of_z(const TSeries& F, int m, int N) {
  if (F.order() < N)
    throw InvalidInput("substitute_t_of_z: input truncation too short");
  // t(z)^n = z^n e^{-n m(m+1) z}; collect z^k over n <= k.
  PolySeries out(N);
  Rat mm(static_cast<long>(m) * (m + 1));
  for (int n = 0; n <= N; ++n) {
    if (F[n].is_zero()) continue;
    Poly base = F[n] / Rat(factorial(static_cast<unsigned long>(n)));
    Rat pw(1);
    for (int k = n; k <= N; ++k) {
      out[k] += base * (pw / Rat(factorial(static_cast<unsigned long>(k - n))));
      pw *= Rat(-n) * mm;
    }
  }
  return out;
}

PolySeries substitute_x_of_zu(const PolySeries& S, int m, int N) {
  if (S.order() < N)
    throw InvalidInput("substitute_x_of_zu: input truncation too short");
  PolySeries out(N);
  std::map<int, Poly> pow_1pu;  // (1+u)^k cache
  for (int r = 0; r <= N; ++r) {
    if (S[r].is_zero()) continue;
    if (S[r].depends_on(Var::q))
      throw InvalidInput("substitute_x_of_zu: q-refined series not supported");
    for (const auto& [k, ck] : S[r].collect(Var::x)) {
      if (k < 0) throw AlgebraError("substitute_x_of_zu: negative x power");
      auto it = pow_1pu.find(k);
      if (it == pow_1pu.end())
        it = pow_1pu.emplace(k, one_plus_u().pow(k)).first;
      // x^k = (1+u)^k sum_s (-kmu)^s z^s / s!
      Poly head = ck * it->second;
      Rat pw(1);
      for (int s = 0; r + s <= N; ++s) {
        out[r + s] += head * Poly::term(
                          pw / Rat(factorial(static_cast<unsigned long>(s))),
                          Var::u, s);
        pw *= Rat(static_cast<long>(-k) * m);
      }
    }
  }
  return out;
}

PolySeries solver_pipeline(int m, int N) {
  TSeries F = solve_functional_equation(m, N, /*with_q=*/false);
  return substitute_x_of_zu(substitute_t_of_z(F, m, N), m, N);
}

RatSeries scalar_pipeline_x1y1(int m, int N) {
  TSeries F = solve_functional_equation(m, N, /*with_q=*/false);
  TSeries F11(N);
  for (int n = 0; n <= N; ++n)
    F11[n] = Poly(F[n].eval(Var::x, Rat(1)).eval(Var::y, Rat(1)));
  PolySeries z = substitute_t_of_z(F11, m, N);
  RatSeries out(N);
  for (int k = 0; k <= N; ++k) out[k] = z[k].constant_value();
  return out;
}

RatSeries closed_form_F11(int m, int N) {
  RatSeries e = series_exp_linear(Rat(m + 1), N);
  RatSeries lin(N);
  lin[0] = Rat(1);
  if (N >= 1) lin[1] = Rat(-m);
  return lin * e;
}

PolySeries closed_form_G1(int m, int N) {
  // (1 - e^{mzu}) / u: the constant z-coefficient cancels, the rest is
  // divisible by u termwise.
  PolySeries inner(N);
  PolySeries emzu = series_exp_linear(Poly::term(Rat(m), Var::u, 1), N);
  inner[0] = Poly(1L);
  PolySeries diff = series_constant(Poly(1L), N) - emzu;
  if (!diff[0].is_zero())
    throw AlgebraError("closed_form_G1: constant term failed to cancel");
  for (int k = 1; k <= N; ++k) {
    if (diff[k].low_degree(Var::u) < 1)
      throw AlgebraError("closed_form_G1: 1/u failed to cancel");
    inner[k] = diff[k].shift(Var::u, -1);
  }
  Poly arg = Poly(static_cast<long>(m + 1)) -
             Poly::term(Rat(m - 1), Var::u, 1);  // (m+1) - (m-1)u
  PolySeries expo = series_exp_linear(arg, N);
  return scale(expo * inner, one_plus_u());
}

PolySeries closed_form_m1_double_sum(int N) {
  // F / ((1+u) e^{2yz}) = sum_{0<=i<=j} u^{j-i} z^{i+j} y^i (y-1)^j /(i!j!)
  //                     - sum_{0<=j<i} u^{i-j-1} z^{i+j} y^i (y-1)^j /(i!j!)
  Poly ym1 = kY - Poly(1L);
  PolySeries full(N);
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; i + j <= N; ++j) {
      Rat c = Rat(1) / Rat(factorial(static_cast<unsigned long>(i)) *
                           factorial(static_cast<unsigned long>(j)));
      Poly term = kY.pow(i) * ym1.pow(j) * c;
      if (i <= j)
        full[i + j] += term * Poly::variable(Var::u, j - i);
      else
        full[i + j] -= term * Poly::variable(Var::u, i - j - 1);
    }
  }
  PolySeries e2yz = series_exp_linear(kY * Rat(2), N);
  return scale(full * e2yz, one_plus_u());
}

PolySeries closed_form_m1_upos(int N) {
  // (1+u) e^{2yz} [u^>=] ( e^{zu(y-1) + zy/u} - (1/u) e^{z(y-1)/u + zyu} ).
  Poly ym1 = kY - Poly(1L);
  Poly arg1 = kU * ym1 + kY.shift(Var::u, -1);
  Poly arg2 = ym1.shift(Var::u, -1) + kY * kU;
  PolySeries part = series_exp_linear(arg1, N) -
                    scale(series_exp_linear(arg2, N), Poly::variable(Var::u, -1));
  PolySeries trunc(N);
  for (int k = 0; k <= N; ++k) trunc[k] = part[k].nonneg_part_u();
  PolySeries e2yz = series_exp_linear(kY * Rat(2), N);
  return scale(trunc * e2yz, one_plus_u());
}

URatSeries to_urat_series(const PolySeries& s) {
  URatSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = URat(s[k]);
  return r;
}

PolySeries assert_polynomial_u(const URatSeries& s) {
  PolySeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].is_polynomial())
      throw AlgebraError("coefficient of z^" + std::to_string(k) +
                         " is not polynomial in u: " + s[k].to_string());
    r[k] = s[k].to_poly();
  }
  return r;
}

PolySeries assert_laurent_u(const URatSeries& s) {
  PolySeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = s[k].to_laurent();
  return r;
}

int eq_g_first_mismatch(int m, int N) {
  PolySeries G = solver_pipeline(m, N);

  PolySeries lhs(N);
  for (int k = 0; k <= N; ++k) lhs[k] = G[k].derivative(Var::y);

  // W = ((1+u)e^{-mzu} - 1)/u has unit constant term, so its inverse has
  // polynomial coefficients.
  PolySeries x_series = series_exp_linear(Poly::term(Rat(-m), Var::u, 1), N);
  x_series = scale(x_series, one_plus_u());
  PolySeries W(N);
  W[0] = Poly(1L);
  for (int k = 1; k <= N; ++k) {
    if (x_series[k].low_degree(Var::u) < 1)
      throw AlgebraError("eq_g: W is not divisible by u");
    W[k] = x_series[k].shift(Var::u, -1);
  }
  PolySeries B(N);
  {
    PolySeries Winv = series_inverse(W);
    PolySeries G1(N);
    for (int k = 0; k <= N; ++k) G1[k] = G[k].eval(Var::y, Rat(1));
    B = G1 * Winv;
  }

  PolySeries H = G;
  for (int step = 0; step < m; ++step) {
    PolySeries d(N);
    for (int k = 0; k <= N; ++k) {
      Poly num = H[k] - H[k].eval(Var::u, Rat(0));
      if (!num.is_zero() && num.low_degree(Var::u) < 1)
        throw AlgebraError("eq_g: Delta_u division not exact");
      d[k] = num.shift(Var::u, -1);
    }
    H = B * d;
  }
  PolySeries pref = series_exp_linear(
      Poly::term(Rat(-m), Var::u, 1) +
          Poly(static_cast<long>(-m) * (m + 1)),
      N);
  PolySeries rhs = scale(pref * H, one_plus_u()).shift_z(1);

  for (int k = 0; k <= N; ++k)
    if (!(lhs[k] == rhs[k])) return k;
  return -1;
}

}  // namespace tamari
