#include "tamari/urat.hpp"

#include <algorithm>
#include <vector>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

constexpr Var kU = Var::u;

// Dense coefficient vector of a univariate polynomial in u.
std::vector<Rat> to_dense(const Poly& p) {
  if (p.is_zero()) return {};
  if (p.low_degree(kU) < 0)
    throw AlgebraError("univariate helper: negative exponent");
  std::vector<Rat> c(static_cast<std::size_t>(p.degree(kU)) + 1, Rat(0));
  for (const auto& [m, coef] : p.terms()) {
    for (int i = 0; i < kVarCount; ++i)
      if (i != int(kU) && m.e[i] != 0)
        throw AlgebraError("univariate helper: extra variable present");
    c[static_cast<std::size_t>(m.e[int(kU)])] = coef;
  }
  return c;
}

Poly from_dense(const std::vector<Rat>& c) {
  Poly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p += Poly::term(c[i], kU, static_cast<int>(i));
  return p;
}

void trim(std::vector<Rat>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Scale to a primitive integer-coefficient polynomial (content removed).
void make_primitive(std::vector<Rat>& a) {
  trim(a);
  if (a.empty()) return;
  Int lcm(1);
  for (const Rat& r : a) {
    Int d = r.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  Int content(0);
  for (Rat& r : a) {
    r *= Rat(lcm);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            Int(r.get_num()).get_mpz_t());
  }
  if (content == 0) return;
  for (Rat& r : a) r /= Rat(content);
  if (a.back() < 0)
    for (Rat& r : a) r = -r;
}

// Euclidean remainder in Q[u].
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

Poly upoly_gcd(const Poly& pa, const Poly& pb) {
  std::vector<Rat> a = to_dense(pa), b = to_dense(pb);
  make_primitive(a);
  make_primitive(b);
  if (a.empty()) return from_dense(b);
  if (b.empty()) return from_dense(a);
  while (!b.empty()) {
    std::vector<Rat> r = poly_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return from_dense(a);
}

Poly upoly_divide_exact(const Poly& p, const Poly& divisor) {
  std::vector<Rat> d = to_dense(divisor);
  trim(d);
  if (d.empty()) throw AlgebraError("upoly_divide_exact: zero divisor");
  if (d.size() == 1) return p / d[0];
  // Long division from the top exponent; coefficients of u are
  // polynomials in the remaining variables.
  std::map<int, Poly> cols = p.collect(kU);
  int deg_d = static_cast<int>(d.size()) - 1;
  Poly quot;
  while (!cols.empty()) {
    auto it = std::prev(cols.end());
    int e = it->first;
    Poly lead = it->second;
    cols.erase(it);
    if (lead.is_zero()) continue;
    if (e < deg_d)
      throw AlgebraError("upoly_divide_exact: division left a remainder");
    Poly qterm = lead / d.back();
    quot += qterm.shift(kU, e - deg_d);
    for (int i = 0; i < deg_d; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;
      Poly& slot = cols[e - deg_d + i];
      slot -= qterm * d[static_cast<std::size_t>(i)];
      if (slot.is_zero()) cols.erase(e - deg_d + i);
    }
  }
  return quot;
}

URat::URat(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw AlgebraError("URat: zero denominator");
  normalize();
}

URat URat::u_power(int k) {
  URat r;
  if (k >= 0) {
    r.num_ = Poly::variable(kU, k);
  } else {
    r.num_ = Poly(1L);
    r.den_ = Poly::variable(kU, -k);
  }
  return r;
}

URat URat::from_laurent(const Poly& laurent) {
  if (laurent.is_zero()) return URat();
  int low = std::min(0, laurent.low_degree(kU));
  return URat(laurent.shift(kU, -low), Poly::variable(kU, -low));
}

void URat::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  if (num_.has_negative_exponent() || den_.has_negative_exponent())
    throw AlgebraError("URat: negative exponent before normalization");
  // Cancel common powers of u.
  int k = std::min(num_.low_degree(kU), den_.low_degree(kU));
  if (k > 0) {
    num_ = num_.shift(kU, -k);
    den_ = den_.shift(kU, -k);
  }
  // Cancel the polynomial gcd.  The denominator is univariate in u, so
  // the gcd with the numerator is the gcd with each of the numerator's
  // u-coefficient groups.
  if (!den_.is_constant()) {
    Poly g = den_.shift(kU, -den_.low_degree(kU));
    for (const auto& [e, grp] : [&] {
           // Group numerator terms by their non-u monomial part.
           std::map<Mono, Poly> groups;
           for (const auto& [m, c] : num_.terms()) {
             Mono rest = m;
             int eu = rest.e[int(kU)];
             rest.e[int(kU)] = 0;
             groups[rest] += Poly::term(c, kU, eu);
           }
           return groups;
         }()) {
      g = upoly_gcd(g, grp.shift(kU, -grp.low_degree(kU)));
      if (g.is_constant()) break;
    }
    if (!g.is_constant()) {
      num_ = upoly_divide_exact(num_, g);
      den_ = upoly_divide_exact(den_, g);
    }
  }
  // Monic denominator.
  int dd = den_.degree(kU);
  Rat lead = den_.coeff_of(kU, dd).constant_value();
  if (lead != 1) {
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
}

URat URat::operator+(const URat& o) const {
  if (den_ == o.den_) return URat(num_ + o.num_, den_);
  return URat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

URat URat::operator-(const URat& o) const {
  if (den_ == o.den_) return URat(num_ - o.num_, den_);
  return URat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

URat URat::operator-() const {
  URat r = *this;
  r.num_ = -r.num_;
  return r;
}

URat URat::operator*(const URat& o) const {
  if (is_zero() || o.is_zero()) return URat();
  return URat(num_ * o.num_, den_ * o.den_);
}

URat URat::operator*(const Rat& c) const {
  URat r = *this;
  r.num_ = r.num_ * c;
  if (c == 0) r.den_ = Poly(1L);
  return r;
}

URat URat::operator/(const URat& o) const { return *this * o.inverse(); }

URat URat::inverse() const {
  if (is_zero()) throw AlgebraError("URat::inverse: zero");
  for (const auto& [m, c] : num_.terms())
    for (int i = 0; i < kVarCount; ++i)
      if (i != int(kU) && m.e[i] != 0)
        throw AlgebraError("URat::inverse: numerator not univariate in u");
  return URat(den_, num_);
}

URat URat::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  URat r(1L);
  URat b = *this;
  while (n) {
    if (n & 1) r = r * b;
    if (n >>= 1) b = b * b;
  }
  return r;
}

bool URat::operator==(const URat& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

Poly URat::to_poly() const {
  if (!is_polynomial()) throw AlgebraError("URat::to_poly: denominator != 1");
  return num_ / den_.constant_value();
}

bool URat::is_laurent() const {
  return den_.term_count() <= 1;  // zero num or monic u^a
}

Poly URat::to_laurent() const {
  if (num_.is_zero()) return Poly();
  if (den_.term_count() != 1)
    throw AlgebraError("URat::to_laurent: denominator is not a power of u: " +
                       den_.to_string());
  int a = den_.degree(kU);
  Rat lead = den_.coeff_of(kU, a).constant_value();
  return num_.shift(kU, -a) / lead;
}

Poly URat::eval_u(const Rat& value) const {
  Poly d = den_.eval(kU, value);
  Rat dv = d.constant_value();
  if (dv == 0) throw AlgebraError("URat::eval_u: denominator vanishes");
  return num_.eval(kU, value) / dv;
}

URat URat::conjugate() const {
  if (num_.is_zero()) return URat();
  int k = std::max(num_.degree(kU), den_.degree(kU));
  Poly n2 = num_.invert_var(kU).shift(kU, k);
  Poly d2 = den_.invert_var(kU).shift(kU, k);
  return URat(n2, d2);
}

int URat::valuation_u() const {
  if (num_.is_zero()) return 0;
  return num_.low_degree(kU) - den_.low_degree(kU);
}

std::string URat::to_string() const {
  if (is_polynomial()) return to_poly().to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace tamari
