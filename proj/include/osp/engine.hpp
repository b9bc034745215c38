#ifndef OSP_ENGINE_HPP
#define OSP_ENGINE_HPP

// Normal-form engine for the algebra with generators t_{ij}^{(r)} and the
// quadratic exchange relations of the extended orthosymplectic Yangian.
//
// The denominator-cleared exchange identity
//   (u-v-kappa)(u-v) [t_ij(u), t_kl(v)] = (u-v-kappa) A(u,v) - (u-v) B(u,v)
// (A = P-type right-hand side, B = Q-type right-hand side, t^{(0)} = delta)
// is solved for the super-commutators C[r,s] = [t_ij^{(r)}, t_kl^{(s)}] by
// coefficient extraction: C[r,s] = 0 when r = 0 or s = 0,
//   C[1,s] = A[0,s] - B[0,s],
// and for r >= 2 the recursion (descending in the first index at fixed total)
//   C[r,s] = 2 C[r-1,s+1] - C[r-2,s+2] + kappa (C[r-1,s] - C[r-2,s+1])
//          + A[r-1,s] - A[r-2,s+1] - kappa A[r-2,s]
//          - B[r-1,s] + B[r-2,s+1].
// The quadratic A/B terms always sit at strictly lower total filtration
// degree, so normalizing them only needs commutators already determined.
//
// The RTT relations also force the symmetry identity T(u-kappa) T^t(u) =
// c(u) 1 with central c(u), so the algebra is not free on all t_ij^{(r)}:
// a PBW basis is given by ordered monomials in the generators t_ij^{(r)}
// with i + j <= N + 2m + 1 for odd rows i and i + j < N + 2m + 1 for even
// rows, together with t_{1'1'}^{(r)} (a triangular change of variables from
// the central series c(u)). The complementary generators are eliminated by
// rewrite rules read off from the coefficients of
//   M_ij(u) := sum_p t_ip(u-kappa) (T^t)_pj(u) = delta_ij M_11(u),
// whose level-r linear part is eps_ij t_{j'i'}^{(r)} + (shift terms in
// t_ij^{(q)}, q <= r) + quadratic corrections of lower filtration degree.
//
// Words are then straightened to the PBW basis ordered lexicographically by
// (i, j, r); odd squares rewrite through (1/2)[g, g]. Rules, the commutator
// table, and word normal forms are memoized. Termination: eliminations
// strictly decrease the multiset of eliminated-letter levels, exchanges
// preserve it and decrease (total level, inversions) lexicographically.

#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "osp/ncpoly.hpp"
#include "osp/superspace.hpp"
#include "osp/tensorop.hpp"

namespace osp {

class Engine {
 public:
  explicit Engine(const SuperSpace& sp, Mutation mu = Mutation::none)
      : sp_(sp), mu_(mu), kappa_(mutated_kappa(sp, mu)) {}

  const SuperSpace& space() const { return sp_; }
  const Rat& kappa() const { return kappa_; }
  Mutation mutation() const { return mu_; }

  int gen_parity(Gen g) const {
    return (sp_.parity(gen_i(g)) + sp_.parity(gen_j(g))) % 2;
  }

  // True if t_ij^{(r)} belongs to the PBW generator set.
  bool kept(int i, int j) const {
    int d = sp_.size();
    if (i == d && j == d) return true;  // t_{1'1'}: carries the center
    if (sp_.parity(i)) return i + j <= d + 1;
    return i + j < d + 1;
  }

  // eps_ij: the sign/theta factor of the super-transpose entry,
  // (T^t)_ij(u) = eps_ij t_{j'i'}(u).
  Rat eps(int i, int j) const {
    int s = (sp_.parity(i) * sp_.parity(j) + sp_.parity(j)) % 2;
    Rat c = Rat(sp_.theta(i) * sp_.theta(j));
    return s ? -c : c;
  }

  // beta_{rq}: coefficient of u^{-r} in (u - kappa)^{-q}.
  Rat beta(int r, int q) const {
    return binom_neg(q, r - q) * rat_pow(-kappa_, r - q);
  }

  // Quadratic part of M_ij^{(r)}: both factors of positive level,
  // sum_p sum_{s=1}^{r-1} sum_{q=1}^{s} beta_{sq} eps_pj
  //   t_ip^{(q)} t_{j'p'}^{(r-s)}   (free words, not normalized).
  NCPoly m_quadratic(int i, int j, int r) const {
    NCPoly out;
    int d = sp_.size();
    for (int p = 1; p <= d; ++p) {
      Rat e = eps(p, j);
      for (int s = 1; s <= r - 1; ++s)
        for (int q = 1; q <= s; ++q) {
          Word w;
          w += gen(i, p, q);
          w += gen(sp_.prime(j), sp_.prime(p), r - s);
          out.add_term(w, beta(s, q) * e);
        }
    }
    return out;
  }

  // M_ij^{(r)} written in the generators (no normalization): the coefficient
  // of u^{-r} in row i, column j of T(u-kappa) T^t(u), r >= 1.
  NCPoly m_entry(int i, int j, int r) const {
    NCPoly out = m_quadratic(i, j, r);
    out += NCPoly::generator(sp_.prime(j), sp_.prime(i), r, eps(i, j));
    for (int q = 1; q <= r; ++q)
      out += NCPoly::generator(i, j, q, beta(r, q));
    return out;
  }

  // Replacement rule for an eliminated generator t_ij^{(r)}, derived from
  // M_{j'i'}^{(r)} = delta_{j'i'} M_11^{(r)}. Raw (not normalized); may
  // contain eliminated letters of strictly lower level.
  const NCPoly& elimination_rule(Gen g) {
    auto it = rules_.find(g);
    if (it != rules_.end()) return it->second;
    int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    assert(!kept(i, j));
    int a = sp_.prime(j), b = sp_.prime(i);
    bool selfpair = (a == i && b == j);
    NCPoly rhs;
    if (a == b) rhs += m_entry(1, 1, r);  // delta_ab M_11^{(r)}
    int qmax = selfpair ? r - 1 : r;
    for (int q = 1; q <= qmax; ++q)
      rhs -= NCPoly::generator(a, b, q, beta(r, q));
    rhs -= m_quadratic(a, b, r);
    Rat coef = selfpair ? eps(a, b) + 1 : eps(a, b);
    assert(!osp::is_zero(coef));
    rhs = rhs * (Rat(1) / coef);
    return rules_.emplace(g, std::move(rhs)).first->second;
  }

  int word_parity(const Word& w) const {
    int p = 0;
    for (Gen g : w) p ^= gen_parity(g);
    return p;
  }

  // Parity of a homogeneous polynomial; throws on mixed parity.
  int parity(const NCPoly& p) const {
    int seen = -1;
    for (const auto& [w, c] : p.terms) {
      int pw = word_parity(w);
      if (seen == -1) seen = pw;
      if (seen != pw)
        throw std::logic_error("parity: polynomial is not homogeneous");
    }
    return seen == -1 ? 0 : seen;
  }

  // Super-commutator of the generators t_ij^{(r)} and t_kl^{(s)} in normal
  // form. Zero when r = 0 or s = 0 by the t^{(0)} = delta convention.
  const NCPoly& commutator(int i, int j, int r, int k, int l, int s) {
    static const NCPoly zero;
    if (r <= 0 || s <= 0) return zero;
    std::uint64_t key = comm_key(gen(i, j, r), gen(k, l, s));
    auto it = ctable_.find(key);
    if (it != ctable_.end()) return it->second;
    NCPoly c;
    if (r == 1) {
      c = normal_form(a_term(i, j, k, l, 0, s) - b_term(i, j, k, l, 0, s));
    } else {
      c = commutator(i, j, r - 1, k, l, s + 1) * Rat(2) -
          commutator(i, j, r - 2, k, l, s + 2) +
          kappa_ * (commutator(i, j, r - 1, k, l, s) -
                    commutator(i, j, r - 2, k, l, s + 1)) +
          normal_form(a_term(i, j, k, l, r - 1, s) -
                      a_term(i, j, k, l, r - 2, s + 1) -
                      kappa_ * a_term(i, j, k, l, r - 2, s) -
                      b_term(i, j, k, l, r - 1, s) +
                      b_term(i, j, k, l, r - 2, s + 1));
    }
    return ctable_.emplace(key, std::move(c)).first->second;
  }

  // A(a,b) and B(a,b): the coefficient of u^{-a} v^{-b} in the cleared
  // right-hand side pieces, as free polynomials (not normalized).
  NCPoly a_term(int i, int j, int k, int l, int a, int b) const {
    if (a < 0 || b < 0) return NCPoly();
    int s1 = (sp_.parity(i) * sp_.parity(j) + sp_.parity(i) * sp_.parity(k) +
              sp_.parity(j) * sp_.parity(k)) %
             2;
    Rat sgn = s1 ? Rat(-1) : Rat(1);
    return (free_mul(letter(k, j, a), letter(i, l, b)) -
            free_mul(letter(k, j, b), letter(i, l, a))) *
           sgn;
  }

  NCPoly b_term(int i, int j, int k, int l, int a, int b) const {
    if (a < 0 || b < 0) return NCPoly();
    NCPoly out;
    int d = sp_.size();
    if (k == sp_.prime(i)) {
      for (int p = 1; p <= d; ++p) {
        int s = (sp_.parity(i) + sp_.parity(i) * sp_.parity(j) +
                 sp_.parity(j) * sp_.parity(p)) %
                2;
        Rat c = Rat(sp_.theta(i) * sp_.theta(p)) * (s ? Rat(-1) : Rat(1));
        out += free_mul(letter(p, j, a), letter(sp_.prime(p), l, b)) * c;
      }
    }
    if (l == sp_.prime(j)) {
      for (int p = 1; p <= d; ++p) {
        int s = (sp_.parity(i) * sp_.parity(k) +
                 sp_.parity(j) * sp_.parity(k) +
                 sp_.parity(i) * sp_.parity(p)) %
                2;
        Rat c = Rat(sp_.theta(sp_.prime(j)) * sp_.theta(sp_.prime(p))) *
                (s ? Rat(-1) : Rat(1));
        out -= free_mul(letter(k, sp_.prime(p), b), letter(i, p, a)) * c;
      }
    }
    if (mu_ == Mutation::q_sign) out = -out;
    return out;
  }

  // Normal form of a word: straighten descents g > h via
  //   g h = (-1)^{p(g) p(h)} h g + [g, h]
  // and odd squares via g g = (1/2) [g, g].
  // Words longer than this are normalized without being memoized: long
  // intermediates are rarely revisited and caching them exhausts memory.
  static constexpr size_t kNfCacheLen = 3;

  NCPoly nf_word(const Word& w) {
    bool cacheable = w.size() <= kNfCacheLen;
    if (cacheable) {
      auto it = nfcache_.find(w);
      if (it != nfcache_.end()) return it->second;
    }
    NCPoly res;
    // Substitute the first eliminated letter, if any, then recurse.
    for (size_t t = 0; t < w.size(); ++t) {
      if (!kept(gen_i(w[t]), gen_j(w[t]))) {
        Word prefix = w.substr(0, t), suffix = w.substr(t + 1);
        NCPoly rule = elimination_rule(w[t]);
        for (const auto& [rw, rc] : rule.terms)
          res += nf_word(prefix + rw + suffix) * rc;
        if (cacheable) nfcache_.emplace(w, res);
        return res;
      }
    }
    size_t pos = w.size();
    for (size_t t = 0; t + 1 < w.size(); ++t) {
      if (w[t] > w[t + 1] || (w[t] == w[t + 1] && gen_parity(w[t]))) {
        pos = t;
        break;
      }
    }
    if (pos == w.size()) {
      res = NCPoly::monomial(w);
    } else {
      Gen g = w[pos], h = w[pos + 1];
      Word prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
      const NCPoly& br = commutator(gen_i(g), gen_j(g), gen_r(g), gen_i(h),
                                    gen_j(h), gen_r(h));
      Rat half_or_one = (g == h) ? rat(1, 2) : Rat(1);
      for (const auto& [bw, bc] : br.terms)
        res += nf_word(prefix + bw + suffix) * (bc * half_or_one);
      if (g != h) {
        Rat sgn = (gen_parity(g) && gen_parity(h)) ? Rat(-1) : Rat(1);
        Word swapped = prefix;
        swapped += h;
        swapped += g;
        swapped += suffix;
        res += nf_word(swapped) * sgn;
      }
    }
    if (cacheable) nfcache_.emplace(w, res);
    return res;
  }

  NCPoly normal_form(const NCPoly& p) {
    NCPoly res;
    for (const auto& [w, c] : p.terms) res += nf_word(w) * c;
    return res;
  }

  NCPoly mul(const NCPoly& a, const NCPoly& b) {
    return normal_form(free_mul(a, b));
  }

  // [a, b] = a b - (-1)^{p(a) p(b)} b a on homogeneous arguments.
  NCPoly super_comm(const NCPoly& a, const NCPoly& b) {
    Rat sgn = (parity(a) && parity(b)) ? Rat(-1) : Rat(1);
    return mul(a, b) - sgn * mul(b, a);
  }

  // The anti-automorphism tau: t_ij(u) -> t_ji(u) (-1)^{p(i)p(j) + p(j)},
  // reversing products with the Koszul sign of the permutation.
  NCPoly tau(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms) {
      Word rev;
      Rat coeff = c;
      int cross = 0;
      for (size_t s = 0; s < w.size(); ++s)
        for (size_t t = s + 1; t < w.size(); ++t)
          cross += gen_parity(w[s]) * gen_parity(w[t]);
      if (cross % 2) coeff = -coeff;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Gen g = *it;
        int i = gen_i(g), j = gen_j(g);
        int sg = (sp_.parity(i) * sp_.parity(j) + sp_.parity(j)) % 2;
        if (sg) coeff = -coeff;
        rev += gen(j, i, gen_r(g));
      }
      out += nf_word(rev) * coeff;
    }
    return out;
  }

  // Residual of the cleared exchange identity at grid point (a, b); zero for
  // every a, b >= -2 iff the table is a consistent solution. Used by the
  // overdetermination suite: the recursion above consumes only a sub-grid.
  NCPoly cleared_identity_residual(int i, int j, int k, int l, int a, int b) {
    NCPoly r;
    auto C = [&](int rr, int ss) -> NCPoly {
      if (rr < 0 || ss < 0) return NCPoly();
      return commutator(i, j, rr, k, l, ss);
    };
    r += C(a + 2, b) - C(a + 1, b + 1) * Rat(2) + C(a, b + 2);
    r -= kappa_ * C(a + 1, b);
    r += kappa_ * C(a, b + 1);
    r -= normal_form(a_term(i, j, k, l, a + 1, b));
    r += normal_form(a_term(i, j, k, l, a, b + 1));
    r += kappa_ * normal_form(a_term(i, j, k, l, a, b));
    r += normal_form(b_term(i, j, k, l, a + 1, b));
    r -= normal_form(b_term(i, j, k, l, a, b + 1));
    return r;
  }

  // Deterministic text dump of the commutator table for levels r, s <= maxr.
  std::string dump_table(int maxr) {
    std::ostringstream os;
    int d = sp_.size();
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k)
          for (int l = 1; l <= d; ++l)
            for (int r = 1; r <= maxr; ++r)
              for (int s = 1; s <= maxr; ++s)
                os << "[t(" << i << "," << j << "," << r << "),t(" << k << ","
                   << l << "," << s
                   << ")] = " << poly_str(commutator(i, j, r, k, l, s))
                   << "\n";
    return os.str();
  }

  size_t table_size() const { return ctable_.size(); }
  size_t nf_cache_size() const { return nfcache_.size(); }

 private:
  static NCPoly letter(int i, int j, int r) {
    if (r == 0) return NCPoly(i == j ? Rat(1) : Rat(0));
    return NCPoly::generator(i, j, r);
  }

  static std::uint64_t comm_key(Gen a, Gen b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  struct WordHash {
    size_t operator()(const Word& w) const {
      return std::hash<std::u32string>{}(w);
    }
  };

  SuperSpace sp_;
  Mutation mu_;
  Rat kappa_;
  std::unordered_map<std::uint64_t, NCPoly> ctable_;
  std::unordered_map<Gen, NCPoly> rules_;
  std::unordered_map<Word, NCPoly, WordHash> nfcache_;
};

}  // namespace osp

#endif  // OSP_ENGINE_HPP
