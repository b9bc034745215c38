#include <gtest/gtest.h>

#include "osp/evalrep.hpp"
#include "osp/gauss.hpp"

using namespace osp;

TEST(EvalRep, ConstantTermIsIdentity) {
  SuperSpace sp(3, 1);
  EvalRep rep(sp, rat(1, 5));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      auto c = block_expand(rep.series_image(i, j), 2);
      SparseMat<Rat> want(5);
      if (i == j) want = SparseMat<Rat>::identity(5);
      EXPECT_TRUE((c[0] - want).is_zero()) << i << "," << j;
    }
}

TEST(EvalRep, SeriesMatchesGenImages) {
  SuperSpace sp(3, 1);
  EvalRep rep(sp, rat(-2, 7));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      auto c = block_expand(rep.series_image(i, j), 4);
      for (int r = 1; r <= 4; ++r)
        EXPECT_TRUE((c[r] - rep.gen_image(i, j, r)).is_zero())
            << i << "," << j << "," << r;
    }
}

TEST(EvalRep, RttGatePasses) {
  for (auto [N, m] : {std::pair{3, 1}, {4, 1}, {3, 2}}) {
    SuperSpace sp(N, m);
    EvalRep rep(sp, rat(1, 3));
    EXPECT_TRUE(rep.rtt_gate(42, 10)) << N << "|" << m;
  }
}

TEST(EvalRep, MutationsFailGate) {
  SuperSpace sp(3, 1);
  for (Mutation mu : {Mutation::q_sign, Mutation::kappa_shift}) {
    EvalRep rep(sp, rat(1, 3), mu);
    EXPECT_FALSE(rep.rtt_gate(42, 10));
  }
}

TEST(EvalRep, CommutatorOracle) {
  // The engine bracket [t_12^{(1)}, t_21^{(1)}] maps to the matrix bracket
  // of the generator images: an independent hand-checkable instance.
  SuperSpace sp(3, 1);
  Engine en(sp);
  EvalRep rep(sp, rat(3, 4));
  NCPoly a = NCPoly::generator(1, 2, 1), b = NCPoly::generator(2, 1, 1);
  SparseMat<Rat> ia = rep.poly_image(a), ib = rep.poly_image(b);
  SparseMat<Rat> mbr = ia * ib + ib * ia;  // both generators are odd
  SparseMat<Rat> sym = rep.poly_image(en.super_comm(a, b));
  EXPECT_TRUE((sym - mbr).is_zero());
  EXPECT_FALSE(mbr.is_zero());  // the bracket is genuinely nonzero
}

TEST(EvalRep, EngineSoundnessSweep) {
  // Every normal-formed bracket maps to the matrix super-bracket.
  SuperSpace sp(3, 1);
  Engine en(sp);
  EvalRep rep(sp, rat(1, 6));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l)
          for (int r = 1; r <= 2; ++r)
            for (int s = 1; r + s <= 4; ++s) {
              NCPoly a = NCPoly::generator(i, j, r);
              NCPoly b = NCPoly::generator(k, l, s);
              int p1 = (sp.parity(i) + sp.parity(j)) % 2;
              int p2 = (sp.parity(k) + sp.parity(l)) % 2;
              SparseMat<Rat> ia = rep.poly_image(a), ib = rep.poly_image(b);
              SparseMat<Rat> mbr =
                  ia * ib - (ib * ia).scaled((p1 && p2) ? Rat(-1) : Rat(1));
              EXPECT_TRUE(
                  (rep.poly_image(en.super_comm(a, b)) - mbr).is_zero())
                  << i << j << r << "|" << k << l << s;
            }
}

TEST(EvalRep, GaussImagesMatchSymbolicCurrents) {
  SuperSpace sp(3, 1);
  Engine en(sp);
  int K = 3, d = sp.size();
  EvalRep rep(sp, rat(1, 5));
  GaussData g = gauss_data(en, K);
  MatRatFunRing ring{d};
  auto dec = gauss_decompose(ring, rep.block_matrix());
  for (int i = 1; i <= d; ++i) {
    auto lhs = block_expand(dec.h[i - 1], K);
    auto rhs = series_image_of(rep, g.h(i));
    for (int k = 0; k <= K; ++k) EXPECT_TRUE((lhs[k] - rhs[k]).is_zero());
  }
  auto le = block_expand(dec.e[0][1], K);
  auto re2 = series_image_of(rep, g.e(1, 2));
  for (int k = 0; k <= K; ++k) EXPECT_TRUE((le[k] - re2[k]).is_zero());
}
