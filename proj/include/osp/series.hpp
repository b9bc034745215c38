#ifndef OSP_SERIES_HPP
#define OSP_SERIES_HPP

// Truncated series machinery over the normal-form engine.
//
// TruncSeries: x(u) = sum_{k=0}^{K} c_k u^{-k} with NCPoly coefficients,
// supporting product, inverse (unit leading term), and argument shift
// x(u+a) via (u+a)^{-r} = sum_k binom(-r,k) a^k u^{-r-k}.
//
// BivarSeries: sparse doubly-indexed coefficients c[a][b] of u^{-a} v^{-b}
// (indices may be negative after multiplying by polynomial prefactors),
// together with a validity region: coefficients are exact for a <= umax,
// b <= vmax, a + b <= diag. Arithmetic intersects regions, so divided
// differences like (x(u)-x(v))/(u-v) and cleared prefactors (u-v-c) are
// handled without ever trusting coefficients beyond what the truncation
// order supports.

#include <map>
#include <utility>
#include <vector>

#include "osp/engine.hpp"

namespace osp {

constexpr int kSeriesInf = 1 << 20;  // effectively unbounded validity

struct TruncSeries {
  int K = 0;
  std::vector<NCPoly> c;  // c[0..K]

  TruncSeries() = default;
  explicit TruncSeries(int K_) : K(K_), c(K_ + 1) {}

  static TruncSeries one(int K_) {
    TruncSeries s(K_);
    s.c[0] = NCPoly(Rat(1));
    return s;
  }

  const NCPoly& coeff(int k) const {
    static const NCPoly zero;
    return (k < 0 || k > K) ? zero : c[k];
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries r(std::min(x.K, y.K));
    for (int k = 0; k <= r.K; ++k) r.c[k] = x.c[k] + y.c[k];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    TruncSeries r(std::min(x.K, y.K));
    for (int k = 0; k <= r.K; ++k) r.c[k] = x.c[k] - y.c[k];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& x, const Rat& s) {
    TruncSeries r = x;
    for (auto& p : r.c) p = p * s;
    return r;
  }

  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
};

inline TruncSeries mul(Engine& en, const TruncSeries& x, const TruncSeries& y) {
  TruncSeries r(std::min(x.K, y.K));
  for (int k = 0; k <= r.K; ++k)
    for (int a = 0; a <= k; ++a)
      r.c[k] += en.mul(x.coeff(a), y.coeff(k - a));
  return r;
}

// Two-sided inverse of a series with leading coefficient 1.
inline TruncSeries invert(Engine& en, const TruncSeries& x) {
  assert(x.c[0] == NCPoly(Rat(1)));
  TruncSeries y(x.K);
  y.c[0] = NCPoly(Rat(1));
  for (int k = 1; k <= x.K; ++k) {
    NCPoly acc;
    for (int a = 1; a <= k; ++a) acc += en.mul(x.c[a], y.c[k - a]);
    y.c[k] = -acc;
  }
  return y;
}

// x(u + a) truncated at the same order.
inline TruncSeries shift(const TruncSeries& x, const Rat& a) {
  TruncSeries r(x.K);
  for (int k = 0; k <= x.K; ++k) {
    r.c[k] = x.c[k];
    for (int q = 1; q < k; ++q)
      r.c[k] += x.c[q] * (binom_neg(q, k - q) * rat_pow(a, k - q));
  }
  return r;
}

// x(u) -> f(u) x(u) for a scalar series f = 1 + f_1 u^{-1} + ...
inline TruncSeries mu_f(const TruncSeries& x, const std::vector<Rat>& f) {
  TruncSeries r(x.K);
  for (int k = 0; k <= x.K; ++k)
    for (int a = 0; a <= k; ++a) {
      Rat fa = (a < (int)f.size()) ? f[a] : Rat(0);
      if (!osp::is_zero(fa)) r.c[k] += x.c[k - a] * fa;
    }
  return r;
}

struct BivarSeries {
  int umax = kSeriesInf, vmax = kSeriesInf, diag = kSeriesInf;
  std::map<std::pair<int, int>, NCPoly> c;

  bool in_region(int a, int b) const {
    return a <= umax && b <= vmax && a + b <= diag;
  }

  void add_at(int a, int b, const NCPoly& p) {
    if (p.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = c.emplace(key, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  const NCPoly& coeff(int a, int b) const {
    static const NCPoly zero;
    auto it = c.find({a, b});
    return it == c.end() ? zero : it->second;
  }

  // Smallest u-index (resp. v-index, total) carrying a nonzero coefficient;
  // used to bound validity of products.
  int min_u() const {
    int m = kSeriesInf;
    for (const auto& [k, p] : c) m = std::min(m, k.first);
    return m;
  }
  int min_v() const {
    int m = kSeriesInf;
    for (const auto& [k, p] : c) m = std::min(m, k.second);
    return m;
  }
  int min_total() const {
    int m = kSeriesInf;
    for (const auto& [k, p] : c) m = std::min(m, k.first + k.second);
    return m;
  }
};

inline int bnd_add(int a, int b) {
  long s = (long)a + (long)b;
  return s >= kSeriesInf ? kSeriesInf : (int)s;
}

inline BivarSeries operator+(const BivarSeries& x, const BivarSeries& y) {
  BivarSeries r;
  r.umax = std::min(x.umax, y.umax);
  r.vmax = std::min(x.vmax, y.vmax);
  r.diag = std::min(x.diag, y.diag);
  for (const auto& [k, p] : x.c)
    if (r.in_region(k.first, k.second)) r.add_at(k.first, k.second, p);
  for (const auto& [k, p] : y.c)
    if (r.in_region(k.first, k.second)) r.add_at(k.first, k.second, p);
  return r;
}

inline BivarSeries operator-(const BivarSeries& x, const BivarSeries& y) {
  BivarSeries r;
  r.umax = std::min(x.umax, y.umax);
  r.vmax = std::min(x.vmax, y.vmax);
  r.diag = std::min(x.diag, y.diag);
  for (const auto& [k, p] : x.c)
    if (r.in_region(k.first, k.second)) r.add_at(k.first, k.second, p);
  for (const auto& [k, p] : y.c)
    if (r.in_region(k.first, k.second)) r.add_at(k.first, k.second, -p);
  return r;
}

inline BivarSeries operator*(const BivarSeries& x, const Rat& s) {
  BivarSeries r = x;
  if (osp::is_zero(s)) {
    r.c.clear();
    return r;
  }
  for (auto& [k, p] : r.c) p = p * s;
  return r;
}

// Product: coefficient (a,b) needs every split (a1,b1)+(a2,b2); it is exact
// when a1 <= x.umax for all contributing splits, which bounds the result
// region by the factors' validity shifted by the partner's minimal orders.
inline BivarSeries mul(Engine& en, const BivarSeries& x, const BivarSeries& y) {
  BivarSeries r;
  r.umax = std::min(bnd_add(x.umax, y.min_u()), bnd_add(y.umax, x.min_u()));
  r.vmax = std::min(bnd_add(x.vmax, y.min_v()), bnd_add(y.vmax, x.min_v()));
  r.diag =
      std::min(bnd_add(x.diag, y.min_total()), bnd_add(y.diag, x.min_total()));
  for (const auto& [kx, px] : x.c)
    for (const auto& [ky, py] : y.c) {
      int a = kx.first + ky.first, b = kx.second + ky.second;
      if (r.in_region(a, b)) r.add_at(a, b, en.mul(px, py));
    }
  return r;
}

// Embed a univariate truncation as a series in u (resp. v).
inline BivarSeries from_u(const TruncSeries& x) {
  BivarSeries r;
  r.umax = x.K;
  for (int k = 0; k <= x.K; ++k) r.add_at(k, 0, x.c[k]);
  return r;
}

inline BivarSeries from_v(const TruncSeries& x) {
  BivarSeries r;
  r.vmax = x.K;
  for (int k = 0; k <= x.K; ++k) r.add_at(0, k, x.c[k]);
  return r;
}

// (x(u) - x(v)) / (u - v) = - sum_{r>=1} c_r sum_{a+b=r+1, a,b>=1}
// u^{-a} v^{-b}; exact on a + b <= K + 1.
inline BivarSeries divided_difference(const TruncSeries& x) {
  BivarSeries r;
  r.diag = x.K + 1;
  for (int k = 1; k <= x.K; ++k)
    for (int a = 1; a <= k; ++a) r.add_at(a, k + 1 - a, -x.c[k]);
  return r;
}

// Multiply by (u - v): shifts indices down by one in u or v.
inline BivarSeries mul_u_minus_v(const BivarSeries& x) {
  BivarSeries r;
  r.umax = x.umax - 1;
  r.vmax = x.vmax - 1;
  r.diag = x.diag - 1;
  for (const auto& [k, p] : x.c) {
    if (r.in_region(k.first - 1, k.second)) r.add_at(k.first - 1, k.second, p);
    if (r.in_region(k.first, k.second - 1)) r.add_at(k.first, k.second - 1, -p);
  }
  return r;
}

// Multiply by u (resp. v).
inline BivarSeries mul_u(const BivarSeries& x) {
  BivarSeries r;
  r.umax = x.umax - 1;
  r.vmax = x.vmax;
  r.diag = x.diag - 1;
  for (const auto& [k, p] : x.c)
    if (r.in_region(k.first - 1, k.second)) r.add_at(k.first - 1, k.second, p);
  return r;
}

inline BivarSeries mul_v(const BivarSeries& x) {
  BivarSeries r;
  r.umax = x.umax;
  r.vmax = x.vmax - 1;
  r.diag = x.diag - 1;
  for (const auto& [k, p] : x.c)
    if (r.in_region(k.first, k.second - 1)) r.add_at(k.first, k.second - 1, p);
  return r;
}

// Substitute u -> u + s: coefficient (a,b) draws on (q,b) for all q <= a, so
// the validity region is preserved.
inline BivarSeries shift_u(const BivarSeries& x, const Rat& s) {
  BivarSeries r;
  r.umax = x.umax;
  r.vmax = x.vmax;
  r.diag = x.diag;
  for (const auto& [k, p] : x.c) {
    if (k.first <= 0) {
      if (r.in_region(k.first, k.second)) r.add_at(k.first, k.second, p);
      continue;
    }
    int hi = std::min(r.umax, bnd_add(r.diag, -k.second));
    assert(hi < kSeriesInf);  // shifting needs a bounded u-region
    for (int a = k.first; a <= hi; ++a)
      r.add_at(a, k.second,
               p * (binom_neg(k.first, a - k.first) *
                    rat_pow(s, a - k.first)));
  }
  return r;
}

// Super-commutator of two bivariate series with homogeneous coefficient
// parities px, py: x y - (-1)^{px py} y x.
inline BivarSeries super_comm(Engine& en, const BivarSeries& x,
                              const BivarSeries& y, int px, int py) {
  BivarSeries xy = mul(en, x, y);
  BivarSeries yx = mul(en, y, x);
  return (px && py) ? xy + yx : xy - yx;
}

}  // namespace osp

#endif  // OSP_SERIES_HPP
