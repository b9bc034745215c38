#ifndef OSP_RATIONAL_HPP
#define OSP_RATIONAL_HPP

// Exact rational scalars (GMP) plus the few numeric helpers used everywhere:
// integer powers, binomial coefficients, and a deterministic small-rational
// sampler for seeded spot checks.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <random>
#include <string>

namespace osp {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  assert(den != 0);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// q^e for e >= 0.
inline Rat rat_pow(const Rat& q, long e) {
  assert(e >= 0);
  Rat acc(1), base(q);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// binomial(n, k) for n >= 0, 0 otherwise out of range.
inline Rat binom(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

// binomial(-r, k) = (-1)^k binomial(r+k-1, k), used by series shifts.
inline Rat binom_neg(long r, long k) {
  Rat b = binom(r + k - 1, k);
  return (k % 2 == 0) ? b : -b;
}

// Deterministic stream of small nonzero rationals for seeded sample points.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  Rat next() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 24);
    long n = 0;
    while (n == 0) n = num(rng_);
    return rat(n, den(rng_));
  }

  long next_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace osp

#endif  // OSP_RATIONAL_HPP
