#ifndef OSP_EVALREP_HPP
#define OSP_EVALREP_HPP

// Evaluation representation: the assignment T(u) -> R(u - a) on W = C^{N|2m}.
// It turns every engine identity into an identity of exact rational (or
// rational-function) matrices, checked independently of the rewriting engine.

#include <stdexcept>
#include <vector>

#include "osp/gauss.hpp"
#include "osp/ratfun.hpp"
#include "osp/tensorop.hpp"

namespace osp {

// Field ring wrapper (for Rat / RatFun scalars).
template <class F>
struct FieldRing {
  using Elem = F;
  Elem zero() const { return F(0); }
  Elem one() const { return F(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a == F(0); }
  bool invertible(const Elem& a) const { return !(a == F(0)); }
  Elem inv(const Elem& a) const { return F(1) / a; }
};

using RatFunRing = FieldRing<RatFun>;

// Square matrices over a field as a ring element type (for block Gauss
// decompositions in the representation).
struct MatRatFunRing {
  int n;
  using Elem = SparseMat<RatFun>;
  Elem zero() const { return Elem(n); }
  Elem one() const { return Elem::identity(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool invertible(const Elem& a) const {
    Elem out(n);
    return try_inverse(a, out);
  }
  Elem inv(const Elem& a) const {
    Elem out(n);
    if (!try_inverse(a, out))
      throw std::runtime_error("MatRatFunRing: singular element");
    return out;
  }

  // Gauss-Jordan inverse over the rational-function field.
  bool try_inverse(const Elem& a, Elem& out) const {
    std::vector<std::vector<RatFun>> w(n, std::vector<RatFun>(2 * n, RatFun()));
    for (int i = 0; i < n; ++i) {
      for (const auto& [j, v] : a.rows[i]) w[i][j] = v;
      w[i][n + i] = RatFun(1);
    }
    for (int k = 0; k < n; ++k) {
      int piv = -1;
      for (int i = k; i < n; ++i)
        if (!w[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return false;
      std::swap(w[k], w[piv]);
      RatFun p = w[k][k];
      for (int j = 0; j < 2 * n; ++j) w[k][j] = w[k][j] / p;
      for (int i = 0; i < n; ++i) {
        if (i == k || w[i][k].is_zero()) continue;
        RatFun f = w[i][k];
        for (int j = 0; j < 2 * n; ++j) w[i][j] = w[i][j] - f * w[k][j];
      }
    }
    out = Elem(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!w[i][n + j].is_zero()) out.add_at(i, j, w[i][n + j]);
    return true;
  }
};

// The evaluation assignment at shift a. Mutations propagate so that negative
// controls are visible here as well as in the engine.
struct EvalRep {
  SuperSpace sp;
  Rat a;
  Mutation mu;
  Rat kap;

  EvalRep(const SuperSpace& space, const Rat& shift,
          Mutation mutation = Mutation::none)
      : sp(space), a(shift), mu(mutation), kap(mutated_kappa(space, mutation)) {
  }

  Rat q_coeff() const { return mu == Mutation::q_sign ? Rat(-1) : Rat(1); }

  // Image of t_ij^{(r)}, r >= 1 (the u^{-r} coefficient of the (i,j) block of
  // R(u-a)): -a^{r-1} P_{ij} + (a+kappa)^{r-1} Q_{ij} as patterns on W.
  SparseMat<Rat> gen_image(int i, int j, int r) const {
    int d = sp.size();
    SparseMat<Rat> out(d);
    Rat pc = -rat_pow(a, r - 1);
    Rat sij = (sp.parity(i) && sp.parity(j)) ? Rat(-1) : Rat(1);
    out.add_at(j - 1, i - 1, pc * sij);
    Rat qc = q_coeff() * rat_pow(a + kap, r - 1) *
             Rat(sp.theta(i) * sp.theta(j)) *
             (sp.parity(j) ? Rat(-1) : Rat(1));
    out.add_at(sp.prime(i) - 1, sp.prime(j) - 1, qc);
    return out;
  }

  // Image of a polynomial in the generators (plain matrix products).
  SparseMat<Rat> poly_image(const NCPoly& p) const {
    int d = sp.size();
    SparseMat<Rat> acc(d);
    for (const auto& [w, c] : p.terms) {
      SparseMat<Rat> m = SparseMat<Rat>::identity(d);
      for (Gen g : w) m = m * gen_image(gen_i(g), gen_j(g), gen_r(g));
      acc = acc + m.scaled(c);
    }
    return acc;
  }

  // Image of the full series t_ij(u) as a matrix over RatFun.
  SparseMat<RatFun> series_image(int i, int j) const {
    int d = sp.size();
    RatFun u = RatFun::x();
    SparseMat<RatFun> out(d);
    if (i == j)
      for (int w = 1; w <= d; ++w) out.add_at(w - 1, w - 1, RatFun(1));
    Rat sij = (sp.parity(i) && sp.parity(j)) ? Rat(-1) : Rat(1);
    out.add_at(j - 1, i - 1, RatFun(-sij) / (u - RatFun(a)));
    RatFun qc = RatFun(q_coeff() * Rat(sp.theta(i) * sp.theta(j)) *
                       (sp.parity(j) ? Rat(-1) : Rat(1))) /
                (u - RatFun(a + kap));
    out.add_at(sp.prime(i) - 1, sp.prime(j) - 1, qc);
    return out;
  }

  // RTT validation gate: since T(u) -> R(u-a), the RTT relation at numeric
  // points is the Yang-Baxter identity at (u, v, a); checked exactly at
  // seeded sample points off the poles.
  bool rtt_gate(unsigned seed, int npoints) const {
    RatSampler rs(seed);
    int done = 0, guard = 0;
    while (done < npoints) {
      if (++guard > 100 * npoints)
        throw std::runtime_error("rtt_gate: sampling stalled");
      Rat u = rs.next(), v = rs.next();
      if (!ybe_point_ok(sp, u, v, a, mu)) continue;
      if (!ybe_residual(sp, u, v, a, mu).is_zero()) return false;
      ++done;
    }
    return true;
  }

  // A coefficient-level residual holds in the representation iff its image
  // is the zero matrix (exact; no sampling needed at fixed shift).
  bool residual_zero(const NCPoly& p) const { return poly_image(p).is_zero(); }

  // The d x d matrix of rep-image blocks of t_ij(u), for block Gauss work.
  std::vector<std::vector<SparseMat<RatFun>>> block_matrix() const {
    int d = sp.size();
    std::vector<std::vector<SparseMat<RatFun>>> t(
        d, std::vector<SparseMat<RatFun>>(d, SparseMat<RatFun>(d)));
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) t[i - 1][j - 1] = series_image(i, j);
    return t;
  }
};

// Expand every entry of a RatFun matrix at infinity to order K; returns the
// list of coefficient matrices c_0..c_K (x(u) = sum c_k u^{-k}).
inline std::vector<SparseMat<Rat>> block_expand(const SparseMat<RatFun>& m,
                                                int K) {
  std::vector<SparseMat<Rat>> out(K + 1, SparseMat<Rat>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (const auto& [j, v] : m.rows[i]) {
      std::vector<Rat> c = expand_at_infinity(v, K);
      for (int k = 0; k <= K; ++k)
        if (!osp::is_zero(c[k])) out[k].add_at(i, j, c[k]);
    }
  return out;
}

// Image of a truncated series: coefficientwise poly images.
inline std::vector<SparseMat<Rat>> series_image_of(const EvalRep& rep,
                                                   const TruncSeries& x) {
  std::vector<SparseMat<Rat>> out;
  out.reserve(x.K + 1);
  for (int k = 0; k <= x.K; ++k) out.push_back(rep.poly_image(x.c[k]));
  return out;
}

}  // namespace osp

#endif  // OSP_EVALREP_HPP
