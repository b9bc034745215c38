#include <gtest/gtest.h>

#include "osp/gauss.hpp"

using namespace osp;

TEST(Quasideterminant, NumericOracle) {
  // |[[1,2],[3,4]]|_{22} = 4 - 3 * 1^{-1} * 2 = -2
  RatRing ring;
  Mat<RatRing> a = make_mat(ring, 2);
  a[0][0] = Rat(1);
  a[0][1] = Rat(2);
  a[1][0] = Rat(3);
  a[1][1] = Rat(4);
  EXPECT_EQ(quasideterminant(ring, a, 2, 2), Rat(-2));
  // |.|_{11} = 1 - 2 * 4^{-1} * 3 = -1/2
  EXPECT_EQ(quasideterminant(ring, a, 1, 1), rat(-1, 2));
}

TEST(Quasideterminant, MatchesSchurOnRationalMatrix) {
  RatRing ring;
  RatSampler rs(5);
  Mat<RatRing> a = make_mat(ring, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = rs.next();
  // |A|_{44} equals the last Schur complement of the LDU sweep.
  auto dec = gauss_decompose(ring, a);
  EXPECT_EQ(quasideterminant(ring, a, 4, 4), dec.h[3]);
}

TEST(Gauss, ReassemblyAllSpaces) {
  for (auto [N, m] : {std::pair{3, 1}, {4, 1}}) {
    SuperSpace sp(N, m);
    Engine en(sp);
    int K = 3, d = sp.size();
    NCSeriesRing ring{&en, K};
    Mat<NCSeriesRing> T = t_matrix(en, K);
    GaussData g = gauss_data(en, K);
    Mat<NCSeriesRing> re = gauss_reassemble(ring, g.dec);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        TruncSeries diff = re[i][j] - T[i][j];
        for (int k = 0; k <= K; ++k)
          EXPECT_TRUE(en.normal_form(diff.c[k]).is_zero())
              << N << "|" << m << " entry " << i << "," << j << " order " << k;
      }
  }
}

TEST(Gauss, TriangularShape) {
  SuperSpace sp(3, 1);
  Engine en(sp);
  GaussData g = gauss_data(en, 3);
  for (int i = 1; i <= 5; ++i) {
    EXPECT_TRUE((g.h(i).c[0] - NCPoly(Rat(1))).is_zero());
    for (int j = i + 1; j <= 5; ++j) {
      EXPECT_TRUE(g.e(i, j).c[0].is_zero());
      EXPECT_TRUE(g.f(j, i).c[0].is_zero());
    }
  }
}

TEST(Gauss, DrinfeldShifts) {
  SuperSpace b(3, 1);
  EXPECT_EQ(drinfeld_shift(b, 1), Rat(0));
  EXPECT_EQ(drinfeld_shift(b, 2), rat(-1, 2));
  SuperSpace b32(3, 2);
  EXPECT_EQ(drinfeld_shift(b32, 1), rat(-1, 2));
  EXPECT_EQ(drinfeld_shift(b32, 2), Rat(0));
  EXPECT_EQ(drinfeld_shift(b32, 3), rat(-1, 2));
  SuperSpace d(4, 1);  // type D: the last current is shifted by -(n-1)/2
  EXPECT_EQ(drinfeld_shift(d, 3), rat(-1, 2));
}

TEST(Gauss, MuFInvarianceOfCurrents) {
  // Applying t(u) -> f(u) t(u) rescales all h_i by f and leaves the
  // currents k_i = h_i^{-1} h_{i+1}, e_i, f_i unchanged.
  SuperSpace sp(3, 1);
  Engine en(sp);
  int K = 3, d = sp.size();
  NCSeriesRing ring{&en, K};
  std::vector<Rat> f = {Rat(1), Rat(1), rat(-2, 3), rat(1, 5)};
  Mat<NCSeriesRing> T = t_matrix(en, K);
  Mat<NCSeriesRing> Tf = make_mat(ring, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Tf[i][j] = mu_f(T[i][j], f);
  auto dec = gauss_decompose(ring, T);
  auto decf = gauss_decompose(ring, Tf);
  TruncSeries fs(K);
  for (int k = 0; k <= K; ++k) fs.c[k] = NCPoly(f[k]);
  for (int i = 0; i < d; ++i) {
    // h_i -> f h_i
    TruncSeries want = mul(en, fs, dec.h[i]);
    EXPECT_TRUE((decf.h[i] - want).is_zero()) << "h " << i;
    for (int j = i + 1; j < d; ++j) {
      EXPECT_TRUE((decf.e[i][j] - dec.e[i][j]).is_zero());
      EXPECT_TRUE((decf.f[j][i] - dec.f[j][i]).is_zero());
    }
  }
}

TEST(Gauss, PsiImageTopLeftEntry) {
  // psi_1 image entry (1,1) is the 2x2 bordered quasideterminant of T.
  SuperSpace sp(3, 1);
  Engine en(sp);
  int K = 2;
  NCSeriesRing ring{&en, K};
  Mat<NCSeriesRing> T = t_matrix(en, K);
  GaussData g = gauss_data(en, K);
  Mat<NCSeriesRing> psi1 = psi_image(en, g, 1);
  Mat<NCSeriesRing> bm = make_mat(ring, 2);
  bm[0][0] = T[0][0];
  bm[0][1] = T[0][1];
  bm[1][0] = T[1][0];
  bm[1][1] = T[1][1];
  TruncSeries q = quasideterminant(ring, bm, 2, 2);
  TruncSeries diff = q - psi1[0][0];
  for (int k = 0; k <= K; ++k)
    EXPECT_TRUE(en.normal_form(diff.c[k]).is_zero());
}
