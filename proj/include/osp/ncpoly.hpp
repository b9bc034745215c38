#ifndef OSP_NCPOLY_HPP
#define OSP_NCPOLY_HPP

// Free associative polynomials over Q in the generators t_{ij}^{(r)}.
// A generator packs (i, j, r) into one char32_t so that integer comparison is
// the lexicographic order on (i, j, r); a word is a u32string; a polynomial
// maps words to rational coefficients (std::map for deterministic iteration).

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "osp/rational.hpp"

namespace osp {

using Gen = char32_t;
using Word = std::u32string;

inline Gen gen(int i, int j, int r) {
  return static_cast<Gen>((i << 12) | (j << 6) | r);
}
inline int gen_i(Gen g) { return static_cast<int>(g) >> 12; }
inline int gen_j(Gen g) { return (static_cast<int>(g) >> 6) & 63; }
inline int gen_r(Gen g) { return static_cast<int>(g) & 63; }

struct NCPoly {
  std::map<Word, Rat> terms;

  NCPoly() = default;
  explicit NCPoly(const Rat& c) {
    if (!osp::is_zero(c)) terms[Word()] = c;
  }
  static NCPoly monomial(const Word& w, const Rat& c = Rat(1)) {
    NCPoly p;
    if (!osp::is_zero(c)) p.terms[w] = c;
    return p;
  }
  static NCPoly generator(int i, int j, int r, const Rat& c = Rat(1)) {
    return monomial(Word(1, gen(i, j, r)), c);
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const Rat& c) {
    if (osp::is_zero(c)) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (osp::is_zero(it->second)) terms.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const Rat& s) {
    NCPoly r;
    if (osp::is_zero(s)) return r;
    for (const auto& [w, c] : a.terms) r.terms[w] = c * s;
    return r;
  }
  friend NCPoly operator*(const Rat& s, const NCPoly& a) { return a * s; }
  friend NCPoly operator-(const NCPoly& a) { return a * Rat(-1); }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms == b.terms;
  }

  // Free (non-normalized) product: pure word concatenation.
  friend NCPoly free_mul(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) r.add_term(wa + wb, ca * cb);
    return r;
  }

  // Filtration degree with deg t^{(r)} = r; the empty word has degree 0.
  long degree() const {
    long d = 0;
    for (const auto& [w, c] : terms) {
      long s = 0;
      for (Gen g : w) s += gen_r(g);
      if (s > d) d = s;
    }
    return d;
  }
};

inline std::string gen_str(Gen g) {
  std::ostringstream os;
  os << "t(" << gen_i(g) << "," << gen_j(g) << "," << gen_r(g) << ")";
  return os.str();
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += gen_str(w[k]);
  }
  return s;
}

inline std::string poly_str(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    if (!first) s += " + ";
    first = false;
    s += rat_str(c);
    if (!w.empty()) {
      s += "*";
      s += word_str(w);
    }
  }
  return s;
}

}  // namespace osp

#endif  // OSP_NCPOLY_HPP
