#include "tamari/sym.hpp"

#include <algorithm>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

constexpr Var kU = Var::u;
constexpr Var kV = Var::v;

Poly one_plus_u() { return Poly(1L) + Poly::variable(kU); }

}  // namespace

Poly v_of_u(int m) {
  return one_plus_u().pow(m + 1).shift(kU, -m);
}

Poly subst_v(const Poly& p, int m) { return p.substitute(kV, v_of_u(m)); }

URat v_inverse_power(int m, int k) {
  return URat(Poly::variable(kU, m * k), one_plus_u().pow((m + 1) * k));
}

// Newton's identities: p_k from e_1..e_k (e_j = 0 beyond the family size).
static std::map<int, Poly> newton_power_sums(const std::vector<Poly>& e,
                                             int count, int window) {
  std::map<int, Poly> p;
  p[0] = Poly(static_cast<long>(count));
  for (int k = 1; k <= window; ++k) {
    Poly acc;
    for (int i = 1; i < k; ++i) {
      if (i >= static_cast<int>(e.size())) break;
      Poly t = e[static_cast<std::size_t>(i)] * p[k - i];
      acc += (i % 2 == 1) ? t : -t;
    }
    if (k < static_cast<int>(e.size())) {
      Poly t = e[static_cast<std::size_t>(k)] * Rat(k);
      acc += (k % 2 == 1) ? t : -t;
    }
    p[k] = acc;
  }
  return p;
}

SymContext SymContext::build(int m, int window) {
  if (m < 1) throw InvalidInput("SymContext: m must be >= 1");
  SymContext ctx;
  ctx.m = m;
  ctx.window = std::max(window, 1);

  // e_j(u_0..u_m) = (-1)^j C(m+1, j) + v [j = 1].
  ctx.e_all.resize(static_cast<std::size_t>(m) + 2);
  for (int j = 0; j <= m + 1; ++j) {
    Rat c = Rat(binomial(m + 1, j));
    if (j % 2 == 1) c = -c;
    ctx.e_all[static_cast<std::size_t>(j)] = Poly(c);
  }
  ctx.e_all[1] += Poly::variable(kV);

  // e_{m-j}(u_1..u_m) = (-1)^{m-j-1} sum_{p<=j} C(m+1, p) u^{p-j-1}.
  ctx.e_oth.resize(static_cast<std::size_t>(m) + 1);
  ctx.e_oth[0] = Poly(1L);
  for (int j = 0; j <= m - 1; ++j) {
    Poly s;
    for (int p = 0; p <= j; ++p)
      s += Poly::term(Rat(binomial(m + 1, p)), kU, p - j - 1);
    if ((m - j - 1) % 2 == 1) s = -s;
    ctx.e_oth[static_cast<std::size_t>(m - j)] = s;
  }

  auto pos_all = newton_power_sums(ctx.e_all, m + 1, ctx.window);
  auto pos_oth = newton_power_sums(ctx.e_oth, m, ctx.window);

  // Negative power sums via the reciprocal families:
  // e_j(1/roots) = e_{count-j}(roots) / e_count(roots).
  std::vector<Poly> er_all(static_cast<std::size_t>(m) + 2);
  Rat lead_all = ctx.e_all[static_cast<std::size_t>(m + 1)].constant_value();
  for (int j = 0; j <= m + 1; ++j)
    er_all[static_cast<std::size_t>(j)] =
        ctx.e_all[static_cast<std::size_t>(m + 1 - j)] / lead_all;
  std::vector<Poly> er_oth(static_cast<std::size_t>(m) + 1);
  // e_m(u_1..u_m) = (-1)^{m-1} / u, an invertible Laurent monomial.
  Poly lead_oth = ctx.e_oth[static_cast<std::size_t>(m)];
  Rat lead_c = lead_oth.terms().begin()->second;
  Poly lead_inv = Poly::term(Rat(1) / lead_c, kU, 1);
  for (int j = 0; j <= m; ++j)
    er_oth[static_cast<std::size_t>(j)] =
        ctx.e_oth[static_cast<std::size_t>(m - j)] * lead_inv;

  auto neg_all = newton_power_sums(er_all, m + 1, ctx.window);
  auto neg_oth = newton_power_sums(er_oth, m, ctx.window);

  ctx.p_all = std::move(pos_all);
  ctx.p_oth = std::move(pos_oth);
  for (int k = 1; k <= ctx.window; ++k) {
    ctx.p_all[-k] = neg_all[k];
    ctx.p_oth[-k] = neg_oth[k];
  }
  return ctx;
}

SymContext SymContext::with_window(int bigger) const {
  return build(m, std::max(bigger, window));
}

const Poly& SymContext::pow_all(int k) const {
  auto it = p_all.find(k);
  if (it == p_all.end())
    throw AlgebraError("power-sum window exhausted (all roots): need k=" +
                       std::to_string(k) + ", window=" +
                       std::to_string(window));
  return it->second;
}

const Poly& SymContext::pow_oth(int k) const {
  auto it = p_oth.find(k);
  if (it == p_oth.end())
    throw AlgebraError("power-sum window exhausted (other roots): need k=" +
                       std::to_string(k) + ", window=" +
                       std::to_string(window));
  return it->second;
}

Poly SymContext::prod_one_plus_roots() const {
  // prod (1+u_i) = sum_j e_j(u_0..u_m).
  Poly s;
  for (const Poly& e : e_all) s += e;
  return s;
}

Rat SymContext::prod_roots() const {
  return e_all[static_cast<std::size_t>(m + 1)].constant_value();
}

URatSeries A_of(const URat& w, int N) {
  URat denom = URat(1L) + w;
  if (denom.is_zero()) throw AlgebraError("A_of: evaluation at u = -1");
  URat base = w / denom;
  URatSeries expo = series_exp_linear(-w, N);
  return scale(expo, base);
}

PolySeries at_u0(const URatSeries& H) {
  PolySeries g(H.order());
  for (int k = 0; k <= H.order(); ++k) g[k] = H[k].at_u0();
  return g;
}

URatSeries lambda_op(const URatSeries& H) {
  const int N = H.order();
  URatSeries shifted(N);
  for (int k = 0; k <= N; ++k) shifted[k] = H[k] - URat(H[k].at_u0());
  URatSeries a_inv = series_inverse(A_of(URat(Poly::variable(kU)), N));
  return shifted * a_inv;
}

std::vector<Partition> partitions_of(int w) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, w, w);
  return out;
}

URatSeries a_power_sum_others(const SymContext& ctx, int r, int N) {
  if (r < 1) throw InvalidInput("a_power_sum_others: r must be >= 1");
  const int m = ctx.m;
  URatSeries out(N);
  URat vinv = v_inverse_power(m, r);
  Rat pw(1);  // (-r)^s
  for (int s = 0; s <= N; ++s) {
    Poly acc;
    for (int c = 0; c <= m * r; ++c)
      acc += ctx.pow_oth(r + s - m * r + c) * Rat(binomial(m * r, c));
    Rat f = pw / Rat(factorial(static_cast<unsigned long>(s)));
    out[s] = URat::from_laurent(acc) * vinv * f;
    pw *= Rat(-r);
  }
  return out;
}

namespace {

// Augmented monomial symmetric functions via the power-sum recursion
//   mt(a :: rest) = p_a mt(rest) - sum_i mt(rest with rest[i] += a).
URatSeries mtilde(const SymContext& ctx, Partition lam, int N,
                  std::map<Partition, URatSeries>& memo) {
  std::sort(lam.begin(), lam.end(), std::greater<int>());
  auto it = memo.find(lam);
  if (it != memo.end()) return it->second;
  URatSeries result(N);
  if (lam.empty()) {
    result[0] = URat(1L);
  } else {
    int a = lam.front();
    Partition rest(lam.begin() + 1, lam.end());
    result = a_power_sum_others(ctx, a, N) * mtilde(ctx, rest, N, memo);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      Partition merged = rest;
      merged[i] += a;
      result = result - mtilde(ctx, merged, N, memo);
    }
  }
  memo.emplace(lam, result);
  return result;
}

}  // namespace

URatSeries monomial_sym_A(const SymContext& ctx, const Partition& lambda,
                          int N) {
  std::map<Partition, URatSeries> memo;
  URatSeries mt = mtilde(ctx, lambda, N, memo);
  // Divide by the product of multiplicities factorials.
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  Rat denom(1);
  for (const auto& [part, count] : mult)
    denom *= Rat(factorial(static_cast<unsigned long>(count)));
  return scale(mt, Rat(1) / denom);
}

Poly laurent_to_v(const Poly& L, int m) {
  Poly rest = L;
  Poly result;
  Poly v_expanded = v_of_u(m);
  while (!rest.is_zero()) {
    int d = rest.degree(kU);
    if (d < 0)
      throw AlgebraError("laurent_to_v: not a polynomial in v: " +
                         L.to_string());
    Poly c = rest.coeff_of(kU, d);
    result += c * Poly::variable(kV, d);
    rest -= c * v_expanded.pow(d);
    if (d == 0) break;  // subtracted the whole u^0 part
  }
  if (!rest.is_zero())
    throw AlgebraError("laurent_to_v: not a polynomial in v: " + L.to_string());
  return result;
}

PhiTable phi_recursion(int m, int N) {
  if (m < 1 || N < 0) throw InvalidInput("phi_recursion: bad arguments");
  SymContext ctx = SymContext::build(m, (m + 2) * N);
  // The A-power sums reach indices down to -m(m-1) and up to m+N; grow
  // the default window when a small N would not cover them.
  int need = std::max(m * (m - 1), m + N);
  if (need > ctx.window) ctx = ctx.with_window(need);
  PhiTable table;
  table.m = m;
  table.N = N;
  table.phi.assign(static_cast<std::size_t>(m) + 1, PolySeries(N));

  // Phi_m(v) = v e^{zyv}.
  PolySeries& top = table.phi[static_cast<std::size_t>(m)];
  for (int s = 0; s <= N; ++s)
    top[s] = Poly::term(Rat(1) / Rat(factorial(static_cast<unsigned long>(s))),
                        kV, s + 1) *
             Poly::variable(Var::y, s);

  auto phi_as_urat = [&](int j) {
    URatSeries r(N);
    for (int s = 0; s <= N; ++s)
      r[s] = URat::from_laurent(
          subst_v(table.phi[static_cast<std::size_t>(j)][s], m));
    return r;
  };

  for (int k = m; k >= 1; --k) {
    // R = sum_{j=k..m} Phi_j(v) sum_{lambda |- j-k+1} C(m-l, k-l)
    //     m_lambda(A(u_1), ..., A(u_m)).
    URatSeries R(N);
    for (int j = k; j <= m; ++j) {
      URatSeries msum(N);
      bool any = false;
      for (const Partition& lam : partitions_of(j - k + 1)) {
        Int coef = binomial(m - static_cast<int>(lam.size()),
                            k - static_cast<int>(lam.size()));
        if (coef == 0) continue;
        msum = msum + scale(monomial_sym_A(ctx, lam, N), Rat(coef));
        any = true;
      }
      if (any) R = R + phi_as_urat(j) * msum;
    }
    // Phi_{k-1}^>(u) = -1/C(m,k) [u^>] R; R must be Laurent in u.
    Rat norm = Rat(-1) / Rat(binomial(m, k));
    PolySeries pos(N);
    int max_deg = 0;
    for (int s = 0; s <= N; ++s) {
      pos[s] = R[s].to_laurent().positive_part_u() * norm;
      max_deg = std::max(max_deg, pos[s].degree(kU));
    }
    if (max_deg > ctx.window) ctx = ctx.with_window(max_deg);
    // Phi_{k-1}(v) = sum_i Phi^>(u_i) - (m+1) Phi^>(-1).
    PolySeries& out = table.phi[static_cast<std::size_t>(k - 1)];
    for (int s = 0; s <= N; ++s) {
      Poly acc;
      for (const auto& [d, cd] : pos[s].collect(kU)) {
        if (d == 0) continue;  // positive part has no constant term
        acc += cd * ctx.pow_all(d);
      }
      acc -= pos[s].eval(kU, Rat(-1)) * Rat(m + 1);
      if (!acc.coeff_of(kV, 0).is_zero())
        throw AlgebraError("phi_recursion: Phi_" + std::to_string(k - 1) +
                           " has a nonzero constant term in v");
      out[s] = acc;
    }
  }
  return table;
}

PolySeries assemble_F(const PhiTable& table, int N) {
  const int m = table.m;
  if (table.N < N) throw InvalidInput("assemble_F: table truncation too short");
  URatSeries total(N);
  URatSeries A = A_of(URat(Poly::variable(kU)), N);
  URatSeries a_pow = series_constant(URat(1L), N);
  for (int k = 0; k <= m; ++k) {
    URatSeries phi_u(N);
    for (int s = 0; s <= N; ++s)
      phi_u[s] = URat::from_laurent(
          subst_v(table.phi[static_cast<std::size_t>(k)][s], m));
    total = total + phi_u * a_pow;
    if (k < m) a_pow = a_pow * A;
  }
  return assert_polynomial_u(total);
}

Ext2 Ext2::operator*(const Ext2& o) const {
  URat disc(Poly(1L) + Poly::term(Rat(4), Var::u, 1));
  return {a * o.a + b * o.b * disc, a * o.b + b * o.a};
}

Ext2 Ext2::inverse() const {
  URat disc(Poly(1L) + Poly::term(Rat(4), Var::u, 1));
  URat norm = a * a - b * b * disc;
  if (norm.is_zero()) throw AlgebraError("Ext2::inverse: zero norm");
  URat ninv = norm.inverse();
  return {a * ninv, -(b * ninv)};
}

Ext2 ext2_root_m2(int sign) {
  Poly two_u2 = Poly::term(Rat(2), Var::u, 2);
  URat a(Poly(1L) + Poly::term(Rat(3), Var::u, 1), two_u2);
  URat b(one_plus_u() * Rat(sign), two_u2);
  return {a, b};
}

Ext2 ext2_eval_poly(const Poly& p, const Ext2& w) {
  // Horner in u; coefficients keep their y (and other) content.
  auto cols = p.collect(Var::u);
  if (!cols.empty() && cols.begin()->first < 0)
    throw InvalidInput("ext2_eval_poly: negative u exponent");
  Ext2 acc;
  int prev = -1;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - it->first; ++i) acc = acc * w;
    acc = acc + Ext2(URat(it->second));
    prev = it->first;
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) acc = acc * w;
  return acc;
}

Ext2Series A_of_ext(const Ext2& w, int N) {
  Ext2 denom = Ext2(URat(1L)) + w;
  Ext2 base = w * denom.inverse();
  Ext2Series expo = series_exp_linear(-w, N);
  return scale(expo, base);
}

}  // namespace tamari
