#ifndef OSP_TENSOROP_HPP
#define OSP_TENSOROP_HPP

// Dense-in-structure, sparse-in-storage tensor operators on (C^{N|2m})^{ox k}
// with exact scalar entries: the operators P and Q, the R-matrix
// R(u) = Id - P/u + Q/(u - kappa), flattening with Koszul action signs, and
// the super-transpose. Scalars are templated so the same construction runs
// over plain rationals and over rational functions.

#include <map>
#include <vector>

#include "osp/rational.hpp"
#include "osp/superspace.hpp"

namespace osp {

template <class S>
struct SparseMat {
  int n = 0;
  std::vector<std::map<int, S>> rows;

  explicit SparseMat(int n_ = 0) : n(n_), rows(n_) {}

  static SparseMat identity(int n_) {
    SparseMat a(n_);
    for (int i = 0; i < n_; ++i) a.rows[i][i] = S(1);
    return a;
  }

  void add_at(int r, int c, const S& v) {
    if (v == S(0)) return;
    S& slot = rows[r][c];
    slot = slot + v;
    if (slot == S(0)) rows[r].erase(c);
  }

  S at(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? S(0) : it->second;
  }

  bool is_zero() const {
    for (const auto& row : rows)
      if (!row.empty()) return false;
    return true;
  }

  friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
    SparseMat c = a;
    for (int i = 0; i < b.n; ++i)
      for (const auto& [j, v] : b.rows[i]) c.add_at(i, j, v);
    return c;
  }

  friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
    SparseMat c = a;
    for (int i = 0; i < b.n; ++i)
      for (const auto& [j, v] : b.rows[i]) c.add_at(i, j, S(0) - v);
    return c;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    SparseMat c(a.n);
    for (int i = 0; i < a.n; ++i)
      for (const auto& [k, av] : a.rows[i])
        for (const auto& [j, bv] : b.rows[k]) c.add_at(i, j, av * bv);
    return c;
  }

  SparseMat scaled(const S& s) const {
    SparseMat c(n);
    for (int i = 0; i < n; ++i)
      for (const auto& [j, v] : rows[i]) c.add_at(i, j, v * s);
    return c;
  }
};

// One abstract summand c * e_{i1 j1} (x) e_{i2 j2} of a two-slot operator.
struct TensorTerm {
  int i1, j1, i2, j2;
  Rat coeff;
};

inline std::vector<TensorTerm> p_terms(const SuperSpace& sp) {
  std::vector<TensorTerm> ts;
  for (int i = 1; i <= sp.size(); ++i)
    for (int j = 1; j <= sp.size(); ++j)
      ts.push_back({i, j, j, i, sp.parity(j) ? Rat(-1) : Rat(1)});
  return ts;
}

inline std::vector<TensorTerm> q_terms(const SuperSpace& sp) {
  std::vector<TensorTerm> ts;
  for (int i = 1; i <= sp.size(); ++i)
    for (int j = 1; j <= sp.size(); ++j) {
      Rat c = Rat(sp.theta(i) * sp.theta(j));
      if (sp.parity(i) && sp.parity(j)) c = -c;
      ts.push_back({i, j, sp.prime(i), sp.prime(j), c});
    }
  return ts;
}

// Flatten a two-slot operator to a size^2 matrix acting on ordered basis
// v_{i} (x) v_{k} at slot-major index (i-1)*size + (k-1). The Koszul sign
// (-1)^{(p(i2)+p(j2)) p(j1)} makes matrix action agree with the graded action
// on the tensor product.
template <class S>
SparseMat<S> flatten2(const SuperSpace& sp, const std::vector<TensorTerm>& ts) {
  int d = sp.size();
  SparseMat<S> a(d * d);
  for (const TensorTerm& t : ts) {
    int sgn = ((sp.parity(t.i2) + sp.parity(t.j2)) * sp.parity(t.j1)) % 2;
    Rat c = sgn ? -t.coeff : t.coeff;
    a.add_at((t.i1 - 1) * d + (t.i2 - 1), (t.j1 - 1) * d + (t.j2 - 1), S(c));
  }
  return a;
}

// Embed a two-slot operator into slots (a, b) of a three-slot space (1-based,
// a < b assumed only in labeling; any distinct pair works) and flatten to a
// size^3 matrix. Identity acts in the remaining slot.
template <class S>
SparseMat<S> flatten3(const SuperSpace& sp, const std::vector<TensorTerm>& ts,
                      int slot_a, int slot_b) {
  int d = sp.size();
  SparseMat<S> m(d * d * d);
  int slot_c = 6 - slot_a - slot_b;  // the remaining slot in {1,2,3}
  for (const TensorTerm& t : ts) {
    for (int w = 1; w <= d; ++w) {
      int idx_i[4], idx_j[4];
      idx_i[slot_a] = t.i1;
      idx_j[slot_a] = t.j1;
      idx_i[slot_b] = t.i2;
      idx_j[slot_b] = t.j2;
      idx_i[slot_c] = w;
      idx_j[slot_c] = w;
      int s2 = (sp.parity(idx_i[2]) + sp.parity(idx_j[2])) * sp.parity(idx_j[1]);
      int s3 = (sp.parity(idx_i[3]) + sp.parity(idx_j[3])) *
               (sp.parity(idx_j[1]) + sp.parity(idx_j[2]));
      Rat c = ((s2 + s3) % 2) ? -t.coeff : t.coeff;
      int row = ((idx_i[1] - 1) * d + (idx_i[2] - 1)) * d + (idx_i[3] - 1);
      int col = ((idx_j[1] - 1) * d + (idx_j[2] - 1)) * d + (idx_j[3] - 1);
      m.add_at(row, col, S(c));
    }
  }
  return m;
}

// Negative-control mutations of the construction.
enum class Mutation { none, q_sign, kappa_shift };

inline Rat mutated_kappa(const SuperSpace& sp, Mutation mu) {
  return mu == Mutation::kappa_shift ? sp.kappa() + 1 : sp.kappa();
}

// R(x) = Id - P/x + Q/(x - kappa) flattened on two slots, with the scalar
// reciprocals supplied by the caller (so S can be Rat or a function field).
template <class S>
SparseMat<S> r_matrix2(const SuperSpace& sp, const S& inv_x,
                       const S& inv_x_kappa, Mutation mu = Mutation::none) {
  SparseMat<S> r = SparseMat<S>::identity(sp.size() * sp.size());
  S cq = (mu == Mutation::q_sign) ? S(0) - inv_x_kappa : inv_x_kappa;
  r = r - flatten2<S>(sp, p_terms(sp)).scaled(inv_x) +
      flatten2<S>(sp, q_terms(sp)).scaled(cq);
  return r;
}

template <class S>
SparseMat<S> r_matrix3(const SuperSpace& sp, int slot_a, int slot_b,
                       const S& inv_x, const S& inv_x_kappa,
                       Mutation mu = Mutation::none) {
  int d = sp.size();
  SparseMat<S> r = SparseMat<S>::identity(d * d * d);
  S cq = (mu == Mutation::q_sign) ? S(0) - inv_x_kappa : inv_x_kappa;
  r = r - flatten3<S>(sp, p_terms(sp), slot_a, slot_b).scaled(inv_x) +
      flatten3<S>(sp, q_terms(sp), slot_a, slot_b).scaled(cq);
  return r;
}

// Yang-Baxter residual R12(u-v) R13(u-w) R23(v-w) - R23(v-w) R13(u-w) R12(u-v)
// at rational sample points; zero iff the construction is coherent there.
inline SparseMat<Rat> ybe_residual(const SuperSpace& sp, const Rat& u,
                                   const Rat& v, const Rat& w,
                                   Mutation mu = Mutation::none) {
  Rat kap = mutated_kappa(sp, mu);
  auto rmat = [&](int a, int b, const Rat& x) {
    return r_matrix3<Rat>(sp, a, b, Rat(1) / x, Rat(1) / (x - kap), mu);
  };
  SparseMat<Rat> r12 = rmat(1, 2, u - v);
  SparseMat<Rat> r13 = rmat(1, 3, u - w);
  SparseMat<Rat> r23 = rmat(2, 3, v - w);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

// True if the three pairwise differences avoid the poles of R.
inline bool ybe_point_ok(const SuperSpace& sp, const Rat& u, const Rat& v,
                         const Rat& w, Mutation mu = Mutation::none) {
  Rat kap = mutated_kappa(sp, mu);
  for (const Rat& x : {u - v, u - w, v - w})
    if (is_zero(x) || is_zero(x - kap)) return false;
  return true;
}

// Super-transpose of a scalar size x size matrix:
// (A^t)_{ij} = A_{j' i'} (-1)^{p(i) p(j) + p(j)} theta_i theta_j.
template <class S>
SparseMat<S> super_transpose(const SuperSpace& sp, const SparseMat<S>& a) {
  int d = sp.size();
  SparseMat<S> b(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      S v = a.at(sp.prime(j) - 1, sp.prime(i) - 1);
      if (v == S(0)) continue;
      int sgn = (sp.parity(i) * sp.parity(j) + sp.parity(j)) % 2;
      int th = sp.theta(i) * sp.theta(j);
      Rat c = Rat(th) * (sgn ? Rat(-1) : Rat(1));
      b.add_at(i - 1, j - 1, v * S(c));
    }
  return b;
}

}  // namespace osp

#endif  // OSP_TENSOROP_HPP
