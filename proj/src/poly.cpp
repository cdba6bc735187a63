#include "tamari/poly.hpp"

#include <limits>
#include <sstream>

#include "tamari/errors.hpp"

namespace tamari {

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Mono{}, Rat(c));
}

Poly Poly::variable(Var w, int exp) { return term(Rat(1), w, exp); }

Poly Poly::term(const Rat& c, Var w, int exp) {
  Poly p;
  if (c != 0) {
    Mono m;
    m.e[static_cast<int>(w)] = static_cast<int16_t>(exp);
    p.terms_.emplace(m, c);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw AlgebraError("Poly::constant_value: not constant");
  return terms_.begin()->second;
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::operator/(const Rat& c) const {
  if (c == 0) throw AlgebraError("Poly: division by zero rational");
  return *this * (Rat(1) / c);
}

Poly Poly::pow(int n) const {
  if (n < 0) throw AlgebraError("Poly::pow: negative exponent");
  Poly r(1L);
  Poly b = *this;
  while (n) {
    if (n & 1) r *= b;
    if (n >>= 1) b *= b;
  }
  return r;
}

int Poly::degree(Var w) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[int(w)]));
  return terms_.empty() ? 0 : d;
}

int Poly::low_degree(Var w) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, int(m.e[int(w)]));
  return terms_.empty() ? 0 : d;
}

bool Poly::depends_on(Var w) const {
  for (const auto& [m, c] : terms_)
    if (m.e[int(w)] != 0) return true;
  return false;
}

bool Poly::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    for (int16_t e : m.e)
      if (e < 0) return true;
  return false;
}

Poly Poly::derivative(Var w) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.e[int(w)];
    if (e == 0) continue;
    Mono n = m;
    n.e[int(w)] = static_cast<int16_t>(e - 1);
    r.add_term(n, c * Rat(e));
  }
  return r;
}

Poly Poly::antiderivative_y() const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.e[int(Var::y)];
    if (e < 0) throw AlgebraError("antiderivative_y: negative y exponent");
    Mono n = m;
    n.e[int(Var::y)] = static_cast<int16_t>(e + 1);
    r.add_term(n, c / Rat(e + 1));
  }
  return r;
}

Poly Poly::eval(Var w, const Rat& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.e[int(w)];
    if (e < 0 && value == 0)
      throw AlgebraError("Poly::eval: zero substituted into negative power");
    Mono n = m;
    n.e[int(w)] = 0;
    r.add_term(n, c * rat_pow(value, e));
  }
  return r;
}

Poly Poly::substitute(Var w, const Poly& p) const {
  if (!depends_on(w)) return *this;
  // Negative exponents are resolved only when p is a single term.
  Poly p_inv;
  if (has_negative_exponent(w)) {
    if (p.term_count() != 1)
      throw AlgebraError(
          "Poly::substitute: negative exponents need an invertible monomial");
    const auto& [m, c] = *p.terms().begin();
    Mono mi;
    for (int i = 0; i < kVarCount; ++i) mi.e[i] = static_cast<int16_t>(-m.e[i]);
    p_inv.add_term(mi, Rat(1) / c);
  }
  std::map<int, Poly> pows;  // cache of p^k and p_inv^{-k}
  pows[0] = Poly(1L);
  auto power = [&](int e) -> const Poly& {
    auto it = pows.find(e);
    if (it != pows.end()) return it->second;
    Poly val = e > 0 ? p.pow(e) : p_inv.pow(-e);
    return pows.emplace(e, std::move(val)).first->second;
  };
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int e = n.e[int(w)];
    n.e[int(w)] = 0;
    Poly rest;
    rest.add_term(n, c);
    r += rest * power(e);
  }
  return r;
}

Poly Poly::coeff_of(Var w, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[int(w)] != k) continue;
    Mono n = m;
    n.e[int(w)] = 0;
    r.add_term(n, c);
  }
  return r;
}

std::map<int, Poly> Poly::collect(Var w) const {
  std::map<int, Poly> r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int e = n.e[int(w)];
    n.e[int(w)] = 0;
    r[e].add_term(n, c);
  }
  return r;
}

Poly Poly::positive_part_u() const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.e[int(Var::u)] > 0) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::nonneg_part_u() const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.e[int(Var::u)] >= 0) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::invert_var(Var w) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n.e[int(w)] = static_cast<int16_t>(-n.e[int(w)]);
    r.terms_.emplace(n, c);
  }
  return r;
}

Poly Poly::shift(Var w, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    n.e[int(w)] = static_cast<int16_t>(n.e[int(w)] + k);
    r.terms_.emplace(n, c);
  }
  return r;
}

Poly ring_inverse(const Poly& p) {
  if (!p.is_constant() || p.is_zero())
    throw AlgebraError("ring_inverse(Poly): leading coefficient not a unit");
  return Poly(Rat(1) / p.constant_value());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < kVarCount; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[i];
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace tamari
