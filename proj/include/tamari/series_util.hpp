#pragma once

#include <algorithm>
#include <vector>

#include "tamari/errors.hpp"
#include "tamari/rational.hpp"

namespace tamari {

inline Rat ring_one(const Rat&) { return Rat(1); }
inline Rat ring_inverse(const Rat& a) {
  if (a == 0) throw AlgebraError("series_inverse: zero leading coefficient");
  return Rat(1) / a;
}

// Truncated power series in z over a ring R.  Coefficients 0..order are
// stored; all binary operations truncate to the smaller order.
template <class R>
struct Series {
  std::vector<R> c;

  Series() = default;
  explicit Series(int order) : c(static_cast<std::size_t>(order) + 1) {}
  int order() const { return static_cast<int>(c.size()) - 1; }

  const R& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
  R& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

  Series truncate(int n) const {
    Series r(std::min(n, order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = c[k];
    return r;
  }

  // Multiply by z^k, dropping overflow beyond the original order.
  Series shift_z(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = c[i];
    return r;
  }

  bool operator==(const Series& o) const = default;
};

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
  Series<R> r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
  Series<R> r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

template <class R>
Series<R> operator-(const Series<R>& a) {
  Series<R> r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = R() - a[k];
  return r;
}

template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  Series<R> r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i)
    for (int j = 0; i + j <= r.order() && j <= b.order(); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

template <class R, class S>
Series<R> scale(const Series<R>& a, const S& s) {
  Series<R> r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * s;
  return r;
}

template <class R>
Series<R> series_constant(const R& v, int order) {
  Series<R> r(order);
  r[0] = v;
  return r;
}

// exp(z * L) truncated at z^order.
template <class R>
Series<R> series_exp_linear(const R& L, int order) {
  Series<R> r(order);
  R p = L;  // will hold L^k
  Rat f(1);
  r[0] = ring_one(R{});
  for (int k = 1; k <= order; ++k) {
    f /= Rat(k);
    r[k] = p * f;
    if (k < order) p = p * L;
  }
  return r;
}

// Multiplicative inverse of a series whose constant coefficient is
// invertible in R (R must provide ring_one and coefficient inversion via
// ring_inverse).
template <class R>
Series<R> series_inverse(const Series<R>& a) {
  Series<R> r(a.order());
  R lead_inv = ring_inverse(a[0]);
  r[0] = lead_inv;
  for (int k = 1; k <= a.order(); ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j) acc = acc + a[j] * r[k - j];
    r[k] = (R() - acc) * lead_inv;
  }
  return r;
}

template <class R>
Series<R> series_pow(const Series<R>& a, int n) {
  Series<R> r = series_constant(ring_one(R{}), a.order());
  Series<R> b = a;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

using RatSeries = Series<Rat>;

}  // namespace tamari
