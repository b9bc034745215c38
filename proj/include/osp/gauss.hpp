#ifndef OSP_GAUSS_HPP
#define OSP_GAUSS_HPP

// Gauss decomposition T = F H E over a (possibly noncommutative) ring, via
// iterated Schur complements, together with quasideterminants and the
// Gaussian-generator bookkeeping (currents and their Drinfeld shifts).
//
// The ring is passed as an object with element type Ring::Elem providing
// zero/one/add/sub/mul/inv/is_zero (and invertible for pivot checks).

#include <stdexcept>
#include <vector>

#include "osp/series.hpp"

namespace osp {

// --- ring instances ---------------------------------------------------------

struct RatRing {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return osp::is_zero(a); }
  bool invertible(const Elem& a) const { return !osp::is_zero(a); }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
};

// Truncated series with NCPoly coefficients; invertible iff the leading
// coefficient is a nonzero scalar.
struct NCSeriesRing {
  Engine* en;
  int K;
  using Elem = TruncSeries;
  Elem zero() const { return TruncSeries(K); }
  Elem one() const { return TruncSeries::one(K); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return osp::mul(*en, a, b); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool invertible(const Elem& a) const {
    return a.c[0].terms.size() == 1 && a.c[0].terms.count(Word()) == 1;
  }
  Elem inv(Elem a) const {
    Rat lead = a.c[0].terms.at(Word());
    a = a * (Rat(1) / lead);
    return invert(*en, a) * (Rat(1) / lead);
  }
};

template <class R>
using Mat = std::vector<std::vector<typename R::Elem>>;

template <class R>
Mat<R> make_mat(const R& ring, int n) {
  return Mat<R>(n, std::vector<typename R::Elem>(n, ring.zero()));
}

template <class R>
Mat<R> identity_mat(const R& ring, int n) {
  Mat<R> m = make_mat(ring, n);
  for (int i = 0; i < n; ++i) m[i][i] = ring.one();
  return m;
}

template <class R>
Mat<R> mat_mul(const R& ring, const Mat<R>& a, const Mat<R>& b) {
  int n = (int)a.size();
  Mat<R> c = make_mat(ring, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (ring.is_zero(a[i][k])) continue;
      for (int j = 0; j < n; ++j)
        c[i][j] = ring.add(c[i][j], ring.mul(a[i][k], b[k][j]));
    }
  return c;
}

// Solve A x = c by Gaussian elimination with left pivot inverses (valid over
// a noncommutative ring; rows are permuted to find invertible pivots).
template <class R>
std::vector<typename R::Elem> solve_linear(const R& ring, Mat<R> a,
                                           std::vector<typename R::Elem> c) {
  int n = (int)a.size();
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (ring.invertible(a[i][k])) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::runtime_error("solve_linear: no invertible pivot");
    std::swap(a[k], a[piv]);
    std::swap(c[k], c[piv]);
    typename R::Elem pinv = ring.inv(a[k][k]);
    for (int j = k; j < n; ++j) a[k][j] = ring.mul(pinv, a[k][j]);
    c[k] = ring.mul(pinv, c[k]);
    for (int i = 0; i < n; ++i) {
      if (i == k || ring.is_zero(a[i][k])) continue;
      typename R::Elem f = a[i][k];
      for (int j = k; j < n; ++j)
        a[i][j] = ring.sub(a[i][j], ring.mul(f, a[k][j]));
      c[i] = ring.sub(c[i], ring.mul(f, c[k]));
    }
  }
  return c;
}

template <class R>
Mat<R> mat_inverse(const R& ring, const Mat<R>& a) {
  int n = (int)a.size();
  Mat<R> inv = make_mat(ring, n);
  for (int j = 0; j < n; ++j) {
    std::vector<typename R::Elem> e(n, ring.zero());
    e[j] = ring.one();
    std::vector<typename R::Elem> x = solve_linear(ring, a, e);
    for (int i = 0; i < n; ++i) inv[i][j] = x[i];
  }
  return inv;
}

// Quasideterminant |A|_{ij} = a_ij - r_i^j (A^{ij})^{-1} c_j^i (1-based i,j).
template <class R>
typename R::Elem quasideterminant(const R& ring, const Mat<R>& a, int i,
                                  int j) {
  int n = (int)a.size();
  int n1 = n - 1;
  Mat<R> minor(n1, std::vector<typename R::Elem>(n1, ring.zero()));
  std::vector<typename R::Elem> col(n1, ring.zero()), row(n1, ring.zero());
  int ri = 0;
  for (int p = 1; p <= n; ++p) {
    if (p == i) continue;
    int rj = 0;
    for (int q = 1; q <= n; ++q) {
      if (q == j) continue;
      minor[ri][rj] = a[p - 1][q - 1];
      ++rj;
    }
    col[ri] = a[p - 1][j - 1];
    ++ri;
  }
  int rj = 0;
  for (int q = 1; q <= n; ++q) {
    if (q == j) continue;
    row[rj] = a[i - 1][q - 1];
    ++rj;
  }
  std::vector<typename R::Elem> x = solve_linear(ring, minor, col);
  typename R::Elem acc = a[i - 1][j - 1];
  for (int k = 0; k < n1; ++k) acc = ring.sub(acc, ring.mul(row[k], x[k]));
  return acc;
}

// Gauss decomposition of a square matrix with invertible leading pivots:
// T = F H E with F lower unitriangular, H diagonal, E upper unitriangular.
// schur[l] holds the trailing block after eliminating the first l rows and
// columns (the image of the level-l Schur complement embedding), schur[0]=T.
template <class R>
struct GaussDecomposition {
  std::vector<typename R::Elem> h;  // h[i], 0-based row index
  Mat<R> e;                         // e[i][j] for i < j, else unset
  Mat<R> f;                         // f[j][i] for j > i
  std::vector<Mat<R>> schur;
};

template <class R>
GaussDecomposition<R> gauss_decompose(const R& ring, const Mat<R>& t) {
  int n = (int)t.size();
  GaussDecomposition<R> g;
  g.h.assign(n, ring.zero());
  g.e = make_mat(ring, n);
  g.f = make_mat(ring, n);
  g.schur.push_back(t);
  Mat<R> m = t;
  for (int k = 0; k < n; ++k) {
    if (!ring.invertible(m[k][k]))
      throw std::runtime_error("gauss_decompose: pivot not invertible");
    g.h[k] = m[k][k];
    typename R::Elem hinv = ring.inv(m[k][k]);
    for (int j = k + 1; j < n; ++j) g.e[k][j] = ring.mul(hinv, m[k][j]);
    for (int i = k + 1; i < n; ++i) g.f[i][k] = ring.mul(m[i][k], hinv);
    Mat<R> next = m;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        next[i][j] =
            ring.sub(m[i][j], ring.mul(ring.mul(m[i][k], hinv), m[k][j]));
    m = next;
    g.schur.push_back(m);
  }
  return g;
}

// Reassemble F H E to validate the decomposition.
template <class R>
Mat<R> gauss_reassemble(const R& ring, const GaussDecomposition<R>& g) {
  int n = (int)g.h.size();
  Mat<R> fm = identity_mat(ring, n), hm = make_mat(ring, n),
         em = identity_mat(ring, n);
  for (int i = 0; i < n; ++i) hm[i][i] = g.h[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) fm[i][j] = g.f[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) em[i][j] = g.e[i][j];
  return mat_mul(ring, fm, mat_mul(ring, hm, em));
}

// --- Yangian-specific bookkeeping -------------------------------------------

// The generator matrix T(u) truncated at order K, entries in normal form.
inline Mat<NCSeriesRing> t_matrix(Engine& en, int K) {
  const SuperSpace& sp = en.space();
  int d = sp.size();
  NCSeriesRing ring{&en, K};
  Mat<NCSeriesRing> t = make_mat(ring, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      TruncSeries s(K);
      if (i == j) s.c[0] = NCPoly(Rat(1));
      for (int r = 1; r <= K; ++r)
        s.c[r] = en.normal_form(NCPoly::generator(i, j, r));
      t[i - 1][j - 1] = s;
    }
  return t;
}

// Gaussian generators and the current/Drinfeld series built on top of them.
struct GaussData {
  int K = 0;
  GaussDecomposition<NCSeriesRing> dec;

  // 1-based accessors matching the sources' index conventions.
  const TruncSeries& h(int i) const { return dec.h[i - 1]; }
  const TruncSeries& e(int i, int j) const { return dec.e[i - 1][j - 1]; }
  const TruncSeries& f(int j, int i) const { return dec.f[j - 1][i - 1]; }
};

inline GaussData gauss_data(Engine& en, int K) {
  NCSeriesRing ring{&en, K};
  GaussData g;
  g.K = K;
  g.dec = gauss_decompose(ring, t_matrix(en, K));
  return g;
}

// Current label range: i = 1..m+n in both types (type D's last current is
// built from rows m+n-1 and m+n+1).
inline TruncSeries current_k(Engine& en, const GaussData& g, int i) {
  const SuperSpace& sp = en.space();
  int mn = sp.m() + sp.n();
  if (sp.type() == SeriesType::D && i == mn)
    return mul(en, invert(en, g.h(mn - 1)), g.h(mn + 1));
  return mul(en, invert(en, g.h(i)), g.h(i + 1));
}

inline TruncSeries current_e(const SuperSpace& sp, const GaussData& g, int i) {
  int mn = sp.m() + sp.n();
  if (sp.type() == SeriesType::D && i == mn) return g.e(mn - 1, mn + 1);
  return g.e(i, i + 1);
}

inline TruncSeries current_f(const SuperSpace& sp, const GaussData& g, int i) {
  int mn = sp.m() + sp.n();
  if (sp.type() == SeriesType::D && i == mn) return g.f(mn + 1, mn - 1);
  return g.f(i + 1, i);
}

// Drinfeld shift for the i-th current.
inline Rat drinfeld_shift(const SuperSpace& sp, int i) {
  int mn = sp.m() + sp.n();
  if (sp.type() == SeriesType::D && i == mn)
    return -rat(sp.n() - 1, 2);
  Rat s = rat(sp.m() - i, 2);
  return (i <= sp.m()) ? -s : s;
}

// kappa_i(u), xi^+_i(u), xi^-_i(u); coefficient r (0-based, of u^{-r-1}) of
// kappa_i is series coefficient r+1.
inline TruncSeries drinfeld_kappa(Engine& en, const GaussData& g, int i) {
  return shift(current_k(en, g, i), drinfeld_shift(en.space(), i));
}

inline TruncSeries drinfeld_xi_plus(Engine& en, const GaussData& g, int i) {
  return shift(current_f(en.space(), g, i), drinfeld_shift(en.space(), i));
}

inline TruncSeries drinfeld_xi_minus(Engine& en, const GaussData& g, int i) {
  const SuperSpace& sp = en.space();
  int mn = sp.m() + sp.n();
  TruncSeries e = shift(current_e(sp, g, i), drinfeld_shift(sp, i));
  bool negate = (i <= sp.m()) && !(sp.type() == SeriesType::D && i == mn);
  return negate ? e * Rat(-1) : e;
}

// Largest l for which the level-l Schur complement embedding is defined.
inline int psi_bound(const SuperSpace& sp) {
  int mn = sp.m() + sp.n();
  return sp.type() == SeriesType::B ? mn : mn - 1;
}

// The level-l Schur complement of T(u): the (size-2l) x (size-2l) block with
// both row and column indices in {l+1, ..., l'} taken from schur[l]. Its
// entries realize the embedded smaller Yangian's generator series.
inline Mat<NCSeriesRing> psi_image(Engine& en, const GaussData& g, int l) {
  const SuperSpace& sp = en.space();
  if (l < 1 || l > psi_bound(sp))
    throw std::invalid_argument("psi_image: level out of range");
  int d = sp.size();
  NCSeriesRing ring{&en, g.K};
  int nd = d - 2 * l;
  Mat<NCSeriesRing> out = make_mat(ring, nd);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) out[i][j] = g.dec.schur[l][l + i][l + j];
  return out;
}

}  // namespace osp

#endif  // OSP_GAUSS_HPP
