#ifndef OSP_SUPERSPACE_HPP
#define OSP_SUPERSPACE_HPP

// Index bookkeeping for the Z2-graded vector space C^{N|2m}: parities, the
// index involution i -> i', the signs theta_i, the constant kappa, and the
// root/bilinear-form data used by the current presentations.

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/rational.hpp"

namespace osp {

enum class SeriesType { B, D };  // N odd -> B, N even -> D

class SuperSpace {
 public:
  SuperSpace(int N, int m) : N_(N), m_(m) {
    if (N < 3) throw std::invalid_argument("SuperSpace: need N >= 3");
    if (m < 1) throw std::invalid_argument("SuperSpace: need m >= 1");
    n_ = N / 2;
    size_ = N + 2 * m;
    type_ = (N % 2 == 1) ? SeriesType::B : SeriesType::D;
    kappa_ = rat(N, 2) - m - 1;
  }

  int N() const { return N_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return size_; }
  SeriesType type() const { return type_; }
  const Rat& kappa() const { return kappa_; }

  // Indices run 1..size. parity = 1 (odd) on 1..m and m'..1'.
  int parity(int i) const {
    assert(1 <= i && i <= size_);
    return (i <= m_ || i > size_ - m_) ? 1 : 0;
  }

  // The involution i -> i' reversing the index order.
  int prime(int i) const {
    assert(1 <= i && i <= size_);
    return size_ - i + 1;
  }

  // theta_i = 1 for i <= N + m, -1 for the last m indices.
  int theta(int i) const {
    assert(1 <= i && i <= size_);
    return (i <= N_ + m_) ? 1 : -1;
  }

  // Number of current labels: m+n for B, m+n for D as well (the D family has
  // currents 1..m+n with the last one built from rows m+n-1, m+n+1).
  int num_currents() const { return m_ + n_; }

  // (epsilon_i, epsilon_j) for 1 <= i, j <= m+n; epsilon with index m+n+1
  // (used in type B h-relations) pairs to zero with everything.
  Rat eps_pairing(int i, int j) const {
    if (i == m_ + n_ + 1 || j == m_ + n_ + 1) return Rat(0);
    assert(1 <= i && i <= m_ + n_ && 1 <= j && j <= m_ + n_);
    if (i != j) return Rat(0);
    return (i <= m_) ? Rat(-1) : Rat(1);
  }

  // Simple root alpha_i, 1 <= i <= m+n, as an integer vector in the epsilon
  // basis (length m+n).
  std::vector<int> alpha(int i) const {
    int mn = m_ + n_;
    assert(1 <= i && i <= mn);
    std::vector<int> a(mn, 0);
    if (i < mn) {
      a[i - 1] = 1;
      a[i] = -1;
    } else if (type_ == SeriesType::B) {
      a[mn - 1] = 1;
    } else {
      a[mn - 2] = 1;
      a[mn - 1] = 1;
    }
    return a;
  }

  Rat alpha_pairing(int i, int j) const {
    std::vector<int> a = alpha(i), b = alpha(j);
    Rat s(0);
    for (int t = 0; t < m_ + n_; ++t)
      s += Rat(a[t]) * Rat(b[t]) * eps_pairing(t + 1, t + 1);
    return s;
  }

  // (epsilon_i, alpha_j), with i allowed to be m+n+1. In type B the extra
  // index carries the zero weight; in type D it carries -epsilon_{m+n}
  // (the (m+n+1)-st row of the matrix is the primed partner of row m+n).
  Rat eps_alpha_pairing(int i, int j) const {
    if (i == m_ + n_ + 1) {
      if (type_ == SeriesType::B) return Rat(0);
      std::vector<int> b = alpha(j);
      return -Rat(b[m_ + n_ - 1]) * eps_pairing(m_ + n_, m_ + n_);
    }
    std::vector<int> b = alpha(j);
    Rat s(0);
    for (int t = 0; t < m_ + n_; ++t)
      s += Rat(b[t]) * eps_pairing(i, t + 1);
    return s;
  }

  // Cartan matrix entry c_ij = (alpha_i, alpha_j), except in type B the last
  // row is doubled so that c_{m+n, j} = 2 (alpha_{m+n}, alpha_j).
  Rat cartan(int i, int j) const {
    Rat c = alpha_pairing(i, j);
    if (type_ == SeriesType::B && i == m_ + n_) c *= 2;
    return c;
  }

 private:
  int N_, m_, n_, size_;
  SeriesType type_;
  Rat kappa_;
};

}  // namespace osp

#endif  // OSP_SUPERSPACE_HPP
