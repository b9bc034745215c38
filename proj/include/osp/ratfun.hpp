#ifndef OSP_RATFUN_HPP
#define OSP_RATFUN_HPP

// Exact univariate polynomials and rational functions over Q, plus the
// expansion of a rational function at infinity as a series in u^{-1}.

#include <cassert>
#include <vector>

#include "osp/rational.hpp"

namespace osp {

struct Poly {
  std::vector<Rat> a;  // a[k] multiplies u^k; normalized: no trailing zeros

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (!osp::is_zero(c)) a.push_back(c);
  }
  static Poly x() { return Poly::of({Rat(0), Rat(1)}); }
  static Poly of(std::vector<Rat> v) {
    Poly p;
    p.a = std::move(v);
    p.trim();
    return p;
  }

  void trim() {
    while (!a.empty() && osp::is_zero(a.back())) a.pop_back();
  }
  bool is_zero() const { return a.empty(); }
  int deg() const { return (int)a.size() - 1; }  // -1 for the zero polynomial
  const Rat& lc() const { return a.back(); }
  Rat coeff(int k) const {
    return (k < 0 || k >= (int)a.size()) ? Rat(0) : a[k];
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r;
    r.a.resize(std::max(p.a.size(), q.a.size()), Rat(0));
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = p.coeff(k) + q.coeff(k);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    Poly r;
    r.a.resize(std::max(p.a.size(), q.a.size()), Rat(0));
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = p.coeff(k) - q.coeff(k);
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    Poly r;
    r.a.assign(p.a.size() + q.a.size() - 1, Rat(0));
    for (size_t i = 0; i < p.a.size(); ++i)
      for (size_t j = 0; j < q.a.size(); ++j) r.a[i + j] += p.a[i] * q.a[j];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& p, const Rat& s) {
    Poly r = p;
    for (auto& c : r.a) c *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.a == q.a; }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
  }
};

// Remainder of p modulo monic-scaled q (Euclidean division).
inline Poly poly_rem(Poly p, const Poly& q) {
  assert(!q.is_zero());
  while (p.deg() >= q.deg()) {
    Rat f = p.lc() / q.lc();
    int sh = p.deg() - q.deg();
    for (int k = 0; k <= q.deg(); ++k) p.a[k + sh] -= f * q.a[k];
    p.trim();
  }
  return p;
}

inline Poly poly_gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = poly_rem(p, q);
    p = q;
    q = r;
  }
  if (!p.is_zero()) p = p * (Rat(1) / p.lc());  // monic
  return p;
}

inline Poly poly_div_exact(const Poly& p, const Poly& q) {
  assert(!q.is_zero());
  Poly rem = p, quo;
  quo.a.assign(std::max(p.deg() - q.deg() + 1, 0), Rat(0));
  while (rem.deg() >= q.deg()) {
    Rat f = rem.lc() / q.lc();
    int sh = rem.deg() - q.deg();
    quo.a[sh] = f;
    for (int k = 0; k <= q.deg(); ++k) rem.a[k + sh] -= f * q.a[k];
    rem.trim();
  }
  assert(rem.is_zero());
  quo.trim();
  return quo;
}

struct RatFun {
  Poly num, den;  // den monic, gcd(num, den) = 1; zero is 0/1

  RatFun() : den(Rat(1)) {}
  RatFun(const Rat& c) : num(c), den(Rat(1)) {}  // NOLINT: implicit by design
  RatFun(int c) : num(Rat(c)), den(Rat(1)) {}    // NOLINT
  RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  static RatFun x() { return RatFun(Poly::x(), Poly(Rat(1))); }

  void reduce() {
    assert(!den.is_zero());
    if (num.is_zero()) {
      den = Poly(Rat(1));
      return;
    }
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0) {
      num = poly_div_exact(num, g);
      den = poly_div_exact(den, g);
    }
    Rat l = den.lc();
    num = num * (Rat(1) / l);
    den = den * (Rat(1) / l);
  }

  bool is_zero() const { return num.is_zero(); }

  friend RatFun operator+(const RatFun& f, const RatFun& g) {
    return RatFun(f.num * g.den + g.num * f.den, f.den * g.den);
  }
  friend RatFun operator-(const RatFun& f, const RatFun& g) {
    return RatFun(f.num * g.den - g.num * f.den, f.den * g.den);
  }
  friend RatFun operator*(const RatFun& f, const RatFun& g) {
    return RatFun(f.num * g.num, f.den * g.den);
  }
  friend RatFun operator/(const RatFun& f, const RatFun& g) {
    assert(!g.is_zero());
    return RatFun(f.num * g.den, f.den * g.num);
  }
  friend bool operator==(const RatFun& f, const RatFun& g) {
    return f.num == g.num && f.den == g.den;
  }

  Rat eval(const Rat& x) const {
    Rat d = den.eval(x);
    assert(!osp::is_zero(d));
    return num.eval(x) / d;
  }
};

// Coefficients g_0..g_K of the expansion f(u) = sum_k g_k u^{-k} at infinity;
// requires deg num <= deg den.
inline std::vector<Rat> expand_at_infinity(const RatFun& f, int K) {
  std::vector<Rat> out(K + 1, Rat(0));
  if (f.is_zero()) return out;
  int dn = f.num.deg(), dd = f.den.deg();
  assert(dn <= dd);
  // In x = 1/u: f = x^{dd-dn} * nrev(x) / drev(x), drev(0) = lc(den) != 0.
  std::vector<Rat> nrev(K + 1, Rat(0)), drev(K + 1, Rat(0));
  for (int k = 0; k <= std::min(dn, K); ++k) nrev[k] = f.num.coeff(dn - k);
  for (int k = 0; k <= std::min(dd, K); ++k) drev[k] = f.den.coeff(dd - k);
  std::vector<Rat> q(K + 1, Rat(0));  // nrev / drev as a power series in x
  for (int k = 0; k <= K; ++k) {
    Rat acc = nrev[k];
    for (int j = 1; j <= k; ++j) acc -= drev[j] * q[k - j];
    q[k] = acc / drev[0];
  }
  int sh = dd - dn;
  for (int k = sh; k <= K; ++k) out[k] = q[k - sh];
  return out;
}

}  // namespace osp

#endif  // OSP_RATFUN_HPP
