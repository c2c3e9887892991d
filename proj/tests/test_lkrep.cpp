#include <gtest/gtest.h>

#include "bmw/lkrep.hpp"

using namespace bmw;
using namespace bmw::scalars;

namespace {

std::shared_ptr<const RootSystem> rs_of(const char* t) {
  return std::make_shared<const RootSystem>(RootSystem::build(t));
}

template <class Model>
void expect_braids(const LKRepresentation<Model>& lk, const char* tag) {
  const RootSystem& rs = lk.roots();
  for (Node i = 0; i < rs.rank(); ++i)
    for (Node j = i + 1; j < rs.rank(); ++j) {
      const auto& a = lk.sigma(i);
      const auto& b = lk.sigma(j);
      if (rs.adjacent(i, j))
        EXPECT_TRUE(a * b * a == b * a * b) << tag << " " << i + 1 << "," << j + 1;
      else
        EXPECT_TRUE(a * b == b * a) << tag << " " << i + 1 << "," << j + 1;
    }
}

}  // namespace

TEST(HBeta, HighestRootAndOrthogonalShift) {
  for (const char* t : {"A5", "D5", "E6", "E7", "E8"}) {
    auto rs = rs_of(t);
    for (Node i : rs->c_nodes()) EXPECT_EQ(h_beta_i(*rs, rs->highest_root(), i), i);
    for (const auto& b : rs->positive_roots())
      for (Node i = 0; i < rs->rank(); ++i) {
        if (rs->pairing_simple(i, b) != 0) continue;
        Node h = h_beta_i(*rs, b, i);
        EXPECT_TRUE(rs->in_c(h));
        for (Node j = 0; j < rs->rank(); ++j) {
          if (j == i || rs->adjacent(i, j)) continue;
          Root c = b + rs->simple(j);
          if (rs->is_positive_root(c)) EXPECT_EQ(h_beta_i(*rs, c, i), h);
        }
      }
  }
  auto rs = rs_of("A3");
  EXPECT_THROW(h_beta_i(*rs, rs->simple(0), 0), std::invalid_argument);
}

TEST(HBeta, FullTypeOracle) {
  for (const char* t : {"A3", "A4", "D4"}) {
    auto rs = rs_of(t);
    HeckeModel model(rs);
    for (const auto& b : rs->positive_roots())
      for (Node i = 0; i < rs->rank(); ++i) {
        if (rs->pairing_simple(i, b) != 0) continue;
        HeckeElement oracle = model.closed_form(h_word(*rs, b, i));
        EXPECT_EQ(oracle, model.generator(h_beta_i(*rs, b, i))) << t << " " << b.to_string();
      }
  }
}

TEST(TCoeff, SmallCases) {
  auto rs = rs_of("D4");
  TCoefficients<HeckeModel> tc{HeckeModel(rs)};
  const auto& mdl = tc.model();
  for (Node i = 0; i < 4; ++i) {
    EXPECT_EQ(tc.t(i, rs->simple(i)), mdl.one());
    for (Node j = 0; j < 4; ++j) {
      if (j != i) EXPECT_TRUE(tc.t(i, rs->simple(j)).is_zero());
      if (rs->adjacent(i, j))
        EXPECT_EQ(tc.t(i, rs->simple(i) + rs->simple(j)), mdl.from_scalar(m()));
    }
  }
}

TEST(TCoeff, LFreeAndSupportedOnC) {
  for (const char* t : {"A4", "D4", "D5"}) {
    auto rs = rs_of(t);
    TCoefficients<HeckeModel> tc{HeckeModel(rs)};
    for (Node i = 0; i < rs->rank(); ++i)
      for (const auto& b : rs->positive_roots()) {
        const HeckeElement& v = tc.t(i, b);
        EXPECT_TRUE(v.is_l_free());
        if (!v.is_zero()) EXPECT_EQ(v.algebra(), tc.model().z0());
      }
  }
}

TEST(TCoeff, ChoiceIndependenceAndClosedFormAgreement) {
  for (const char* t : {"A4", "D4", "D5"}) {
    auto rs = rs_of(t);
    TCoefficients<HeckeModel> tc{HeckeModel(rs)};
    int compared = 0;
    for (Node i = 0; i < rs->rank(); ++i)
      for (const auto& b : rs->positive_roots())
        for (const auto& [tag, v] : tc.alternatives(i, b)) {
          EXPECT_EQ(v, tc.t(i, b)) << t << " i=" << i + 1 << " " << b.to_string() << " " << tag;
          ++compared;
        }
    EXPECT_GT(compared, 0);
  }
}

TEST(Sigma, ColumnShapes) {
  auto rs = rs_of("D4");
  LKRepresentation<HeckeModel> lk{HeckeModel(rs)};
  const auto& mdl = lk.model();
  for (Node i = 0; i < 4; ++i) {
    int ai = lk.index(rs->simple(i));
    const auto& col = lk.sigma(i).column(ai);
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col[0].first, ai);
    EXPECT_EQ(col[0].second, mdl.from_scalar(linv()));
    for (const auto& b : rs->positive_roots()) {
      if (rs->pairing_simple(i, b) != -1) continue;
      int c = lk.index(b);
      EXPECT_EQ(*lk.sigma(i).entry(lk.index(b + rs->simple(i)), c), mdl.one());
      EXPECT_EQ(*lk.sigma(i).entry(c, c), mdl.from_scalar(-m()));
      auto top = lk.sigma(i).entry(ai, c);
      HeckeElement want = mdl.from_scalar(linv()) * lk.tcoeffs().t(i, b);
      if (want.is_zero()) EXPECT_FALSE(top.has_value());
      else EXPECT_EQ(*top, want);
    }
  }
}

TEST(Sigma, BraidRelationsGeneric) {
  for (const char* t : {"A2", "A3", "A4", "D4"}) {
    LKRepresentation<HeckeModel> lk{HeckeModel(rs_of(t))};
    expect_braids(lk, t);
  }
}

TEST(Sigma, BraidRelationsAtPointE6) {
  LKRepresentation<PointModel> lk{PointModel(rs_of("E6"), make_rational(5, 7), make_rational(3, 2))};
  expect_braids(lk, "E6");
}

TEST(Sigma, EIdentities) {
  for (const char* t : {"A3", "D4"}) {
    LKRepresentation<HeckeModel> lk{HeckeModel(rs_of(t))};
    auto x = lk.scalar(x_value());
    for (Node i = 0; i < lk.roots().rank(); ++i) {
      EXPECT_TRUE(lk.e(i) * lk.e(i) == x * lk.e(i));
      EXPECT_TRUE(lk.sigma(i) * lk.sigma_inv(i) == lk.identity());
      EXPECT_TRUE(lk.sigma_inv(i) * lk.sigma(i) == lk.identity());
      int ai = lk.index(lk.roots().simple(i));
      EXPECT_EQ(*lk.f(i).entry(ai, ai), lk.scalar(Scalar::l(-2) + m() * linv() - Scalar(1)));
      // The image of f_i lies in the x_{alpha_i} row.
      for (int c = 0; c < lk.dim(); ++c)
        for (const auto& [r, v] : lk.f(i).column(c)) EXPECT_EQ(r, ai);
    }
  }
}

TEST(Sigma, PathOperator) {
  for (const char* t : {"A4", "D5"}) {
    LKRepresentation<HeckeModel> lk{HeckeModel(rs_of(t))};
    const RootSystem& rs = lk.roots();
    for (Node i = 0; i < rs.rank(); ++i)
      for (Node k = 0; k < rs.rank(); ++k) {
        auto p = lk.path_operator(i, k);
        const auto& col = p.column(lk.index(rs.simple(i)));
        ASSERT_EQ(col.size(), 1u);
        EXPECT_EQ(col[0].first, lk.index(rs.simple(k)));
        EXPECT_EQ(col[0].second, lk.model().one());
      }
  }
}

TEST(Theta, ClassicalCharacter) {
  auto rs = rs_of("D4");
  ThetaSpec th = classical_lk(*rs);
  EXPECT_EQ(th.dim, 1);
  EXPECT_NO_THROW(classical_lk(*rs, true));
  ThetaScalar r = ThetaScalar::var();
  ThetaScalar rinv = ThetaScalar(1) / r;
  EXPECT_TRUE((rinv * rinv + (r - rinv) * rinv - ThetaScalar(1)).is_zero());
  EXPECT_TRUE((r * r - (r - rinv) * r - ThetaScalar(1)).is_zero());
  ThetaSpec bad = th;
  bad.images[0] = ThetaMatrix::scalar(1, r);
  EXPECT_THROW(bad.validate(*rs), std::invalid_argument);
}

TEST(Theta, SizesAndA2) {
  auto rs = rs_of("A2");
  LKRepresentation<HeckeModel> gen{HeckeModel(rs)};
  ThetaModel th(rs, classical_lk(*rs));
  auto g = gamma_theta(gen, th);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(flatten(g[0], 1).size(), 3u);
  auto a3 = rs_of("A3");
  LKRepresentation<HeckeModel> gen3{HeckeModel(a3)};
  auto g3 = gamma_theta(gen3, ThetaModel(a3, classical_lk(*a3)));
  EXPECT_EQ(flatten(g3[0], 1).size(), 6u);
}

TEST(Theta, SpecializeThenBuildMatchesBuildThenSpecializeD4) {
  auto rs = rs_of("D4");
  LKRepresentation<HeckeModel> gen{HeckeModel(rs)};
  for (bool other : {false, true}) {
    ThetaModel th(rs, classical_lk(*rs, other));
    auto built = gamma_theta(gen, th);
    LKRepresentation<ThetaModel> direct{th};
    for (Node i = 0; i < rs->rank(); ++i) EXPECT_TRUE(built[i] == direct.sigma(i)) << i + 1;
  }
}
