#include <gtest/gtest.h>

#include "bmw/verify.hpp"

using namespace bmw;

namespace {

bool has_check(const SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return true;
  return false;
}

void expect_pass(const SuiteReport& r) {
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  EXPECT_FALSE(r.checks.empty());
}

}  // namespace

TEST(Suites, AllGenericA2A3A4) {
  for (const char* t : {"A1", "A2", "A3", "A4"}) expect_pass(run_suite(Suite::all, t, Mode::make_generic()));
}

TEST(Suites, EssentialD4HasApartPair) {
  SuiteReport r = run_suite(Suite::essential, "D4", Mode::make_generic());
  expect_pass(r);
  EXPECT_TRUE(has_check(r, "essential/e_i e_j = 0 (i, j apart) i=1 j=3"));
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const Check& a, const Check& b) { return a.name < b.name; }));
}

TEST(Suites, GenericModeRejectsLargeTypes) {
  EXPECT_THROW(run_suite(Suite::braid, "E6", Mode::make_generic()), std::invalid_argument);
  EXPECT_THROW(run_suite(Suite::braid, "A6", Mode::make_generic()), std::invalid_argument);
  EXPECT_THROW(parse_suite("bogus"), std::invalid_argument);
  EXPECT_EQ(parse_suite("tau_monoid"), Suite::tau_monoid);
}

TEST(Suites, SpecializedMatchesGenericOnSamples) {
  for (const auto& [l0, r0] : specialization_points())
    for (const char* t : {"A3", "D4"}) expect_pass(run_suite(Suite::all, t, Mode::specialized(l0, r0)));
}

TEST(Suites, SpecializedE6AllPoints) {
  for (const auto& [l0, r0] : specialization_points())
    expect_pass(run_suite(Suite::all, "E6", Mode::specialized(l0, r0)));
}

TEST(Suites, DeterministicReports) {
  auto a = run_suite(Suite::table1, "A4", Mode::make_generic()).to_json().dump();
  auto b = run_suite(Suite::table1, "A4", Mode::make_generic()).to_json().dump();
  EXPECT_EQ(a, b);
}

TEST(Suites, SpecializationPointsAreFixed) {
  auto p = specialization_points();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].first, make_rational(5, 7));
  EXPECT_EQ(p[0].second, make_rational(3, 2));
  EXPECT_EQ(p, specialization_points());
  EXPECT_NE(p[1], p[2]);
}

TEST(CheckList, FirstFailureKeepsWitness) {
  CheckList l;
  l.record("x", true, [] { return std::string("never"); });
  l.record("x", false, [] { return std::string("first"); });
  l.record("x", false, [] { return std::string("second"); });
  auto c = l.sorted();
  ASSERT_EQ(c.size(), 1u);
  EXPECT_FALSE(c[0].pass);
  EXPECT_EQ(c[0].instances, 3u);
  EXPECT_EQ(c[0].witness, "first");
}

TEST(Dims, KnownValues) {
  auto e8 = dims_report(RootSystem::build("E8"));
  EXPECT_EQ(e8.i1_over_i2, mpz_class("41803776000"));
  EXPECT_FALSE(e8.total.has_value());

  auto d4 = dims_report(RootSystem::build("D4"));
  ASSERT_EQ(d4.layers.size(), 4u);
  EXPECT_EQ(d4.layers[0], 192);
  EXPECT_EQ(d4.layers[1], 1152);
  EXPECT_EQ(d4.layers[2], 216);
  EXPECT_EQ(d4.layers[3], 9);
  EXPECT_EQ(*d4.total, 1569);
  EXPECT_EQ(d4.layers[1], d4.i1_over_i2);

  auto a2 = dims_report(RootSystem::build("A2"));
  EXPECT_EQ(a2.layers, (std::vector<mpz_class>{6, 9}));
  EXPECT_EQ(*a2.total, 15);

  auto d5 = dims_report(RootSystem::build("D5"));
  EXPECT_EQ(d5.total_status, "conjectural");
  EXPECT_EQ(*d5.total, mpz_class(33 * 945 - 17 * 120));
}

TEST(Dims, I1OverI2) {
  const std::pair<const char*, const char*> want[] = {{"A2", "9"},       {"A3", "72"},
                                                      {"D4", "1152"},    {"E6", "933120"},
                                                      {"E7", "91445760"}, {"E8", "41803776000"}};
  for (const auto& [t, v] : want) EXPECT_EQ(dims_report(RootSystem::build(t)).i1_over_i2, mpz_class(v)) << t;
}

TEST(Dims, ATotalsAreDoubleFactorials) {
  for (int n = 1; n <= 8; ++n) {
    auto d = dims_report(RootSystem::build("A" + std::to_string(n)));
    mpz_class sum = 0;
    for (const auto& x : d.layers) sum += x;
    EXPECT_EQ(sum, double_factorial(2 * n + 1)) << n;
    EXPECT_EQ(*d.total, sum);
    EXPECT_EQ(d.layers[0], d.hecke_dim);
    EXPECT_EQ(d.layers[1], d.i1_over_i2);
  }
}

TEST(A2, DimensionFifteen) {
  SuiteReport r = a2_dimension_check();
  EXPECT_TRUE(r.all_pass()) << r.to_text(true);
  EXPECT_TRUE(has_check(r, "a2/rank of the 15 monomial images is 15"));
}

namespace {

// z_j sent to the wrong value: the quadratic relation of Z0 breaks.
class SkewedPointModel : public PointModel {
 public:
  using PointModel::PointModel;
  value_type generator(Node j) const { return PointModel::generator(j) * 2; }
};

}  // namespace

TEST(Suites, BrokenModelIsCaughtWithWitness) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build("D4"));
  SuiteRunner<SkewedPointModel> r{SkewedPointModel(rs, make_rational(5, 7), make_rational(3, 2))};
  r.run(Suite::all);
  std::size_t failed = 0;
  for (const auto& c : r.checks())
    if (!c.pass) {
      ++failed;
      EXPECT_FALSE(c.witness.empty()) << c.name;
    }
  EXPECT_GT(failed, 0u);
}
