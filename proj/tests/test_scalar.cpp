#include <gtest/gtest.h>

#include <random>

#include "bmw/scalar.hpp"

using namespace bmw;
using namespace bmw::scalars;

namespace {

Scalar random_scalar(std::mt19937& rng, bool allow_den = true) {
  std::uniform_int_distribution<int> small(-3, 3), nterms(0, 3), deg(0, 2), coin(0, 3);
  std::vector<Scalar::Term> t;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> num;
    for (int d = 0; d <= deg(rng); ++d) num.push_back(make_rational(small(rng), 1 + coin(rng)));
    Poly den(Rational(1));
    if (allow_den && coin(rng) == 0) den = Poly({make_rational(small(rng)), 1});
    t.emplace_back(small(rng), RatFunc(Poly(num), den));
  }
  return Scalar::from_terms(std::move(t));
}

}  // namespace

TEST(Scalar, UnitTimesInverse) { EXPECT_TRUE((l() * linv()).is_one()); }

TEST(Scalar, DivisionByMKeepsDenominatorM) {
  Scalar q = (l() - linv()) / m();
  ASSERT_EQ(q.terms().size(), 2u);
  for (const auto& [e, c] : q.terms()) {
    EXPECT_EQ(c.den(), Poly::var());
    EXPECT_EQ(c.num(), Poly(Rational(e == 1 ? 1 : -1)));
  }
}

TEST(Scalar, LikeTermsCollect) {
  Scalar a = m() * m() + m() * m();
  EXPECT_EQ(a, Scalar(2) * m() * m());
  EXPECT_EQ(a.to_string(), "2*m^2");
}

TEST(Scalar, XValue) {
  Scalar x = x_value();
  EXPECT_EQ(m() * (Scalar(1) - x), l() - linv());
  EXPECT_EQ(eval_at(x, 1, 1), 1);
  // Independent path: plain rationals.
  Rational l0 = make_rational(5, 7), m0 = make_rational(3, 2);
  Rational expect = 1 - (l0 - 1 / l0) / m0;
  EXPECT_EQ(expect, make_rational(51, 35));
  EXPECT_EQ(eval_at(x, l0, m0), make_rational(51, 35));
}

TEST(Scalar, EvalAt) {
  EXPECT_EQ(eval_at(l() + linv(), 2, 1), make_rational(5, 2));
  EXPECT_THROW(eval_at(Scalar(1) / m(), 1, 0), std::domain_error);
  EXPECT_THROW(eval_at(l(), 0, 1), std::domain_error);
}

TEST(Scalar, DivisionByZeroOrNonUnitThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(), std::domain_error);
  EXPECT_THROW(Scalar(1) / (l() + Scalar(1)), std::domain_error);
}

TEST(Scalar, RingAxiomsRandomized) {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Scalar, InverseOfEveryUnit) {
  std::mt19937 rng(99);
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(rng);
    if (a.is_zero() || !a.is_unit()) continue;
    EXPECT_TRUE((a * (Scalar(1) / a)).is_one());
  }
  Scalar u = Scalar(RatFunc(Poly({1, 2}), Poly({-1, 1})), -3);
  EXPECT_TRUE((u * (Scalar(1) / u)).is_one());
}

TEST(Scalar, CanonicalFormIndependentOfPath) {
  // (m^2 - 1)/(m - 1) computed two ways equals m + 1 bit for bit.
  Scalar a = Scalar(RatFunc(Poly({-1, 0, 1}), Poly({-1, 1})));
  Scalar b = m() + Scalar(1);
  EXPECT_EQ(a, b);
  Scalar c = (l() * m() - m() * linv()) / m();
  EXPECT_EQ(c, l() - linv());
  Scalar d = Scalar(RatFunc(Poly({0, 2}), Poly({0, 4})));
  EXPECT_EQ(d, Scalar(make_rational(1, 2)));
}

TEST(Scalar, EvalIsHomomorphism) {
  std::mt19937 rng(7);
  Rational l0 = make_rational(5, 7), m0 = make_rational(13, 11);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    Rational ea, eb;
    try {
      ea = eval_at(a, l0, m0);
      eb = eval_at(b, l0, m0);
    } catch (const std::domain_error&) {
      continue;
    }
    EXPECT_EQ(eval_at(a * b, l0, m0), ea * eb);
    EXPECT_EQ(eval_at(a + b, l0, m0), ea + eb);
  }
}

TEST(Scalar, SubstituteMIntoR) {
  // m = r - 1/r, so the image of m*r equals r^2 - 1.
  RatFunc image(Poly({-1, 0, 1}), Poly::var());
  auto img = (m() * l()).substitute<RVar>(image);
  EXPECT_EQ(img, (Laurent<RVar>::var() * Laurent<RVar>::var() - Laurent<RVar>(1)) /
                     Laurent<RVar>::var() * Laurent<RVar>::l(1));
}
