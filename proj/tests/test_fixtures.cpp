// Recompute the pinned structural constants and compare them against the
// checked-in fixtures file.

#include <gtest/gtest.h>

#include <fstream>

#include "json.hpp"
#include "osp/tensorop.hpp"

using namespace osp;

namespace {

nlohmann::json load_fixtures() {
  std::ifstream in(std::string(OSP_FIXTURES_DIR) + "/derived_constants.json");
  EXPECT_TRUE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

// The coefficient c with M X = c X, for a nonzero reference matrix X.
Rat eigencoeff(const SparseMat<Rat>& M, const SparseMat<Rat>& X, int dim) {
  for (int i = 0; i < dim; ++i)
    for (const auto& [j, v] : X.rows[i])
      if (!is_zero(v)) return M.at(i, j) / v;
  ADD_FAILURE() << "reference matrix is zero";
  return Rat(0);
}

}  // namespace

TEST(Fixtures, DerivedConstantsMatch) {
  nlohmann::json fixtures = load_fixtures();
  ASSERT_EQ(fixtures.size(), 5u);
  for (const auto& fx : fixtures) {
    int N = fx["N"], m = fx["m"];
    SCOPED_TRACE("N=" + std::to_string(N) + " m=" + std::to_string(m));
    SuperSpace sp(N, m);
    int d = sp.size();
    SparseMat<Rat> P = flatten2<Rat>(sp, p_terms(sp));
    SparseMat<Rat> Q = flatten2<Rat>(sp, q_terms(sp));

    Rat qsq = eigencoeff(Q * Q, Q, d * d);
    EXPECT_EQ(rat_str(qsq), fx["Q_squared_coeff"].get<std::string>());
    EXPECT_EQ(qsq, Rat(N - 2 * m));

    Rat pq = eigencoeff(P * Q, Q, d * d);
    EXPECT_EQ(rat_str(pq), fx["PQ_sign"].get<std::string>());

    // R(u) R(-u) = s(u) Id with s(u) = numer(u) / u^2, numer pinned as
    // coefficients [c0, c1, c2].
    auto poly = fx["unitarity_scalar_numer_poly"];
    ASSERT_EQ(poly.size(), 3u);
    Rat kap = sp.kappa();
    for (Rat u : {Rat(2), Rat(5), rat(9, 2)}) {
      if (is_zero(u - kap) || is_zero(u + kap)) continue;
      auto r1 = r_matrix2<Rat>(sp, Rat(1) / u, Rat(1) / (u - kap));
      auto r2 = r_matrix2<Rat>(sp, Rat(-1) / u, Rat(1) / (-u - kap));
      auto pr = r1 * r2;
      Rat scal = pr.at(0, 0);
      EXPECT_TRUE(
          (pr - SparseMat<Rat>::identity(d * d).scaled(scal)).is_zero());
      Rat numer;
      for (int k = 2; k >= 0; --k)
        numer = numer * u + Rat(poly[k].get<std::string>());
      EXPECT_EQ(scal, numer / (u * u));
    }
  }
}
