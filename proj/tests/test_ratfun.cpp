#include <gtest/gtest.h>

#include "osp/ratfun.hpp"

using namespace osp;

TEST(Poly, GcdAndExactDivision) {
  // (x^2 - 1) and (x^2 - 2x + 1) share (x - 1)
  Poly a = Poly::of({Rat(-1), Rat(0), Rat(1)});
  Poly b = Poly::of({Rat(1), Rat(-2), Rat(1)});
  Poly g = poly_gcd(a, b);
  EXPECT_EQ(g.deg(), 1);
  EXPECT_EQ(g.coeff(0), Rat(-1));  // monic: x - 1
  EXPECT_EQ(g.coeff(1), Rat(1));
  Poly q = poly_div_exact(a, g);
  EXPECT_EQ(q.deg(), 1);
  EXPECT_EQ(q.coeff(0), Rat(1));  // x + 1
}

TEST(RatFun, Reduction) {
  // (x^2 - 1)/(x - 1) == x + 1
  RatFun f(Poly::of({Rat(-1), Rat(0), Rat(1)}), Poly::of({Rat(-1), Rat(1)}));
  RatFun g(Poly::of({Rat(1), Rat(1)}), Poly::of({Rat(1)}));
  EXPECT_TRUE(f == g);
}

TEST(RatFun, FieldAxiomsSpot) {
  RatFun x = RatFun::x();
  RatFun one(1);
  RatFun f = (x * x - one) / (x + one);  // = x - 1
  EXPECT_TRUE(f + one == x);
  RatFun h = one / (x - RatFun(Rat(2)));
  EXPECT_TRUE(h * (x - RatFun(Rat(2))) == one);
  EXPECT_EQ(f.eval(Rat(5)), Rat(4));
}

TEST(RatFun, ExpandAtInfinity) {
  // 1/(x - a) = x^{-1} + a x^{-2} + a^2 x^{-3} + ...
  Rat a = rat(2, 3);
  RatFun f = RatFun(1) / (RatFun::x() - RatFun(a));
  auto c = expand_at_infinity(f, 4);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[0], Rat(0));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(c[k], rat_pow(a, k - 1));
}

TEST(RatFun, ExpandPolynomialPart) {
  // (x^2 + 1)/x = x + x^{-1}: no expansion at infinity within our contract,
  // but proper fractions expand exactly.
  RatFun f = RatFun(Rat(3)) / (RatFun::x() * RatFun::x());
  auto c = expand_at_infinity(f, 3);
  EXPECT_EQ(c[2], Rat(3));
  EXPECT_EQ(c[1], Rat(0));
  EXPECT_EQ(c[3], Rat(0));
}
