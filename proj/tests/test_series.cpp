#include <gtest/gtest.h>

#include "osp/engine.hpp"
#include "osp/series.hpp"

using namespace osp;

namespace {
SuperSpace sp31(3, 1);
}

TEST(TruncSeries, InvertRoundTrip) {
  Engine en(sp31);
  TruncSeries x(3);
  x.c[0] = NCPoly(Rat(1));
  x.c[1] = NCPoly::generator(1, 1, 1);
  x.c[2] = NCPoly::generator(1, 2, 1) * rat(1, 3);
  TruncSeries xi = invert(en, x);
  TruncSeries prod = mul(en, x, xi);
  EXPECT_TRUE((prod - TruncSeries::one(3)).is_zero());
  prod = mul(en, xi, x);
  EXPECT_TRUE((prod - TruncSeries::one(3)).is_zero());
}

TEST(TruncSeries, ShiftOracle) {
  // x(u) = u^{-1}; x(u+a) = sum_k (-a)^{k-1} u^{-k}
  TruncSeries x(4);
  x.c[1] = NCPoly(Rat(1));
  Rat a = rat(3, 2);
  TruncSeries y = shift(x, a);
  EXPECT_TRUE(y.c[0].is_zero());
  for (int k = 1; k <= 4; ++k) {
    NCPoly expect = NCPoly(rat_pow(-a, k - 1));
    EXPECT_TRUE((y.c[k] - expect).is_zero()) << "k=" << k;
  }
}

TEST(TruncSeries, ShiftIsAdditive) {
  Engine en(sp31);
  TruncSeries x(3);
  x.c[0] = NCPoly(Rat(1));
  x.c[1] = NCPoly::generator(2, 3, 1);
  x.c[2] = NCPoly::generator(1, 1, 2);
  x.c[3] = NCPoly::generator(2, 2, 3) * Rat(5);
  TruncSeries lhs = shift(shift(x, rat(1, 2)), rat(-2, 3));
  TruncSeries rhs = shift(x, rat(1, 2) + rat(-2, 3));
  EXPECT_TRUE((lhs - rhs).is_zero());
}

TEST(TruncSeries, MuF) {
  // f(u) = 1 + u^{-1} sends a leading-1 series x to f x; at first order the
  // coefficient shifts by 1.
  TruncSeries x(2);
  x.c[0] = NCPoly(Rat(1));
  x.c[1] = NCPoly::generator(1, 1, 1);
  std::vector<Rat> f = {Rat(1), Rat(1), Rat(0)};
  TruncSeries y = mu_f(x, f);
  EXPECT_TRUE((y.c[0] - NCPoly(Rat(1))).is_zero());
  EXPECT_TRUE((y.c[1] - NCPoly::generator(1, 1, 1) - NCPoly(Rat(1))).is_zero());
}

TEST(BivarSeries, DividedDifference) {
  // x(u) = c1 u^{-1} + c2 u^{-2}: (x(u)-x(v))/(u-v) has coefficient -c2 at
  // u^{-1} v^{-1} and -c1 at ... (none at total order 2 other than (1,1)).
  TruncSeries x(3);
  x.c[1] = NCPoly(Rat(4));
  x.c[2] = NCPoly(Rat(7));
  BivarSeries dd = divided_difference(x);
  EXPECT_TRUE((dd.coeff(1, 1) - NCPoly(Rat(-4))).is_zero());
  EXPECT_TRUE((dd.coeff(1, 2) - NCPoly(Rat(-7))).is_zero());
  EXPECT_TRUE((dd.coeff(2, 1) - NCPoly(Rat(-7))).is_zero());
  EXPECT_TRUE(dd.coeff(0, 1).is_zero());
}

TEST(BivarSeries, ClearDenominatorConsistency) {
  // (u - v) * dd(x) == from_u(x) - from_v(x) on the valid region.
  TruncSeries x(3);
  x.c[1] = NCPoly::generator(1, 2, 1);
  x.c[2] = NCPoly::generator(2, 1, 2) * Rat(3);
  x.c[3] = NCPoly(rat(5, 7));
  BivarSeries lhs = mul_u_minus_v(divided_difference(x));
  BivarSeries rhs = from_u(x) - from_v(x);
  BivarSeries res = lhs - rhs;
  for (int a = 0; a <= res.umax; ++a)
    for (int b = 0; a + b <= res.diag && b <= res.vmax; ++b)
      EXPECT_TRUE(res.coeff(a, b).is_zero()) << a << "," << b;
}

TEST(BivarSeries, ProductMatchesUnivariateSpecialization) {
  Engine en(sp31);
  TruncSeries x(3), y(3);
  x.c[0] = NCPoly(Rat(1));
  x.c[1] = NCPoly::generator(1, 2, 1);
  y.c[0] = NCPoly(Rat(1));
  y.c[2] = NCPoly::generator(2, 1, 1);
  // from_u(x) * from_u(y) must reproduce mul(x, y) on the diagonal u-orders.
  BivarSeries p = mul(en, from_u(x), from_u(y));
  TruncSeries xy = mul(en, x, y);
  for (int a = 0; a <= 3; ++a)
    EXPECT_TRUE((p.coeff(a, 0) - xy.c[a]).is_zero()) << a;
}

TEST(BivarSeries, SuperCommOfCommutingScalars) {
  Engine en(sp31);
  TruncSeries x(2), y(2);
  x.c[1] = NCPoly(Rat(2));
  y.c[1] = NCPoly(Rat(5));
  BivarSeries c = super_comm(en, from_u(x), from_v(y), 0, 0);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) EXPECT_TRUE(c.coeff(a, b).is_zero());
}

TEST(BivarSeries, ShiftU) {
  // shift_u(from_u(x), s) == from_u(shift(x, s))
  TruncSeries x(3);
  x.c[1] = NCPoly(Rat(1));
  x.c[2] = NCPoly(rat(1, 2));
  BivarSeries lhs = shift_u(from_u(x), rat(-1, 1));
  BivarSeries rhs = from_u(shift(x, Rat(-1)));
  BivarSeries res = lhs - rhs;
  for (int a = 0; a <= res.umax; ++a)
    for (int b = 0; b <= res.vmax && a + b <= res.diag; ++b)
      EXPECT_TRUE(res.coeff(a, b).is_zero());
}
