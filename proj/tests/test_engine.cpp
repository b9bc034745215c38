#include <gtest/gtest.h>

#include "osp/engine.hpp"
#include "osp/tensorop.hpp"

using namespace osp;

TEST(Engine, EliminationRespectsRowBudget) {
  // The retained generator set: i + j <= d + 1 for odd rows, i + j < d + 1
  // for even rows, plus the (1',1') slot.
  SuperSpace sp(3, 1);
  Engine en(sp);
  int d = sp.size();
  int kept = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) kept += en.kept(i, j) ? 1 : 0;
  // Rows keep 5, 3, 2, 1, 1 slots; the extra (5,5) slot makes 13.
  EXPECT_EQ(kept, 13);
  EXPECT_TRUE(en.kept(1, 1));
  EXPECT_TRUE(en.kept(5, 5));
  EXPECT_FALSE(en.kept(5, 4));
}

TEST(Engine, EliminationRuleIsConsistent) {
  // Substituting the rule into the scalar identity must be the identity the
  // rule was solved from: nf(m_entry(i,j,r)) == delta_ij nf(m_entry(1,1,r)).
  for (auto [N, m] : {std::pair{3, 1}, {4, 1}}) {
    SuperSpace sp(N, m);
    Engine en(sp);
    int d = sp.size();
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int r = 1; r <= 3; ++r) {
          NCPoly res = en.normal_form(en.m_entry(i, j, r));
          if (i == j) res -= en.normal_form(en.m_entry(1, 1, r));
          EXPECT_TRUE(res.is_zero())
              << "N=" << N << " m=" << m << " (" << i << "," << j << "," << r
              << "): " << poly_str(res);
        }
  }
}

TEST(Engine, NormalFormIdempotent) {
  SuperSpace sp(3, 1);
  Engine en(sp);
  RatSampler rs(7);
  for (int t = 0; t < 40; ++t) {
    NCPoly w = free_mul(
        NCPoly::generator((int)rs.next_int(1, 5), (int)rs.next_int(1, 5),
                          (int)rs.next_int(1, 2)),
        NCPoly::generator((int)rs.next_int(1, 5), (int)rs.next_int(1, 5),
                          (int)rs.next_int(1, 2)));
    NCPoly n1 = en.normal_form(w);
    EXPECT_EQ(poly_str(en.normal_form(n1)), poly_str(n1));
  }
}

TEST(Engine, Filtration) {
  // Rewriting never raises the total level of a word.
  SuperSpace sp(3, 1);
  Engine en(sp);
  RatSampler rs(11);
  auto level = [](const Word& w) {
    int s = 0;
    for (Gen g : w) s += gen_r(g);
    return s;
  };
  for (int t = 0; t < 40; ++t) {
    Word w;
    int tot = 0;
    for (int p = 0; p < 3; ++p) {
      int r = (int)rs.next_int(1, 2);
      tot += r;
      w += gen((int)rs.next_int(1, 5), (int)rs.next_int(1, 5), r);
    }
    NCPoly n = en.normal_form(NCPoly::monomial(w));
    for (const auto& [nw, c] : n.terms) EXPECT_LE(level(nw), tot);
  }
}

TEST(Engine, CommutatorAntisymmetry) {
  SuperSpace sp(3, 1);
  Engine en(sp);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      int p1 = (sp.parity(i) + sp.parity(j)) % 2;
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
          int p2 = (sp.parity(k) + sp.parity(l)) % 2;
          Rat sgn = (p1 && p2) ? Rat(-1) : Rat(1);
          NCPoly res = en.commutator(k, l, 1, i, j, 2) +
                       sgn * en.commutator(i, j, 2, k, l, 1);
          EXPECT_TRUE(en.normal_form(res).is_zero());
        }
    }
}

TEST(Engine, ClearedIdentityOffGridPoints) {
  // Spot instances away from the recursion's grid, including negative a, b.
  SuperSpace sp(3, 1);
  Engine en(sp);
  for (int i : {1, 2, 5})
    for (int k : {1, 3}) {
      EXPECT_TRUE(en.cleared_identity_residual(i, 2, k, 4, -2, 3).is_zero());
      EXPECT_TRUE(en.cleared_identity_residual(i, 2, k, 4, 3, -2).is_zero());
      EXPECT_TRUE(en.cleared_identity_residual(i, 1, k, 5, -1, -1).is_zero());
    }
}

TEST(Engine, TauSquaredIsParityAutomorphism) {
  // tau^2(x) = (-1)^{p(x)} x: each generator picks up (-1)^{p(i)+p(j)}
  // across the two applications, so tau is involutive on the even part only.
  SuperSpace sp(3, 1);
  Engine en(sp);
  RatSampler rs(13);
  for (int t = 0; t < 30; ++t) {
    NCPoly p = free_mul(
        NCPoly::generator((int)rs.next_int(1, 5), (int)rs.next_int(1, 5),
                          (int)rs.next_int(1, 2)),
        NCPoly::generator((int)rs.next_int(1, 5), (int)rs.next_int(1, 5),
                          (int)rs.next_int(1, 2)));
    NCPoly n = en.normal_form(p);
    NCPoly want = en.parity(n) ? -n : n;
    EXPECT_EQ(poly_str(en.tau(en.tau(n))), poly_str(want));
  }
}

TEST(Engine, TauOnGenerators) {
  SuperSpace sp(3, 1);
  Engine en(sp);
  // tau(t_12^{(1)}) = t_21^{(1)} (-1)^{p1 p2 + p2} = t_21^{(1)}
  NCPoly im = en.tau(NCPoly::generator(1, 2, 1));
  EXPECT_EQ(poly_str(im), poly_str(en.normal_form(NCPoly::generator(2, 1, 1))));
}

TEST(Engine, DumpDeterministic) {
  SuperSpace sp(3, 1);
  Engine en1(sp), en2(sp);
  std::string d1 = en1.dump_table(2);
  std::string d2 = en2.dump_table(2);
  EXPECT_EQ(d1, d2);
  EXPECT_NE(d1.find("[t(1,1,1),t(1,1,2)] = 0"), std::string::npos);
}

TEST(Engine, MutationBreaksConsistency) {
  // Both negative-control mutations must break the overdetermined identity.
  SuperSpace sp(3, 1);
  for (Mutation mu : {Mutation::q_sign, Mutation::kappa_shift}) {
    Engine en(sp, mu);
    bool broken = false;
    for (int i = 1; i <= 5 && !broken; ++i)
      for (int j = 1; j <= 5 && !broken; ++j)
        for (int k = 1; k <= 5 && !broken; ++k)
          for (int l = 1; l <= 5 && !broken; ++l)
            for (int a = -2; a <= 2 && !broken; ++a)
              for (int b = -2; b <= 2 && !broken; ++b)
                if (!en.cleared_identity_residual(i, j, k, l, a, b).is_zero())
                  broken = true;
    EXPECT_TRUE(broken) << "mutation " << (int)mu << " not detected";
  }
}
