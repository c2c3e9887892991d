#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bmw/json_io.hpp"
#include "bmw/wordalg.hpp"

using namespace bmw;
using namespace bmw::scalars;

namespace {

std::shared_ptr<const RootSystem> rs_of(const char* t) {
  return std::make_shared<const RootSystem>(RootSystem::build(t));
}

BmwWord w_(const char* s, int rank = 8) { return parse_word(s, rank); }

const char* kA2Basis[] = {"",      "g1",    "g2",    "e1",    "e2",    "g1 g2", "g1 e2", "g2 g1",
                          "g2 e1", "e1 g2", "e1 e2", "e2 g1", "e2 e1", "g1 g2 g1", "g1 e2 g1"};

BmwWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), node(0, rank - 1), kind(0, 2);
  BmwWord w(len(rng));
  for (auto& l : w) l = {node(rng), static_cast<Kind>(kind(rng))};
  return w;
}

}  // namespace

TEST(ParseWord, Examples) {
  BmwWord w = parse_word("g1 g2 e1", 2);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], (Letter{0, Kind::g}));
  EXPECT_EQ(w[1], (Letter{1, Kind::g}));
  EXPECT_EQ(w[2], (Letter{0, Kind::e}));
  EXPECT_EQ(parse_word("G3", 3), (BmwWord{{2, Kind::g_inv}}));
  EXPECT_TRUE(parse_word("   ", 2).empty());
  EXPECT_EQ(to_string(parse_word(" g1  G2\te1 ", 2)), "g1 G2 e1");
}

TEST(ParseWord, ErrorsCarryPosition) {
  try {
    parse_word("g1 g9", 2);
    FAIL() << "expected a parse error";
  } catch (const WordParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_word("x1", 2), WordParseError);
  EXPECT_THROW(parse_word("g", 2), WordParseError);
  EXPECT_THROW(parse_word("g1e2", 2), WordParseError);
  EXPECT_THROW(parse_word("g0", 2), WordParseError);
}

TEST(Reduce, WorkedExamples) {
  auto rs = rs_of("A2");
  WordCombination sq;
  sq.add(BmwWord{}, Scalar(1));
  sq.add(w_("g1"), -m());
  sq.add(w_("e1"), m() * linv());
  EXPECT_EQ(reduce_word(rs, w_("g1 g1")), sq);
  EXPECT_EQ(reduce_word(rs, w_("e1 e2 e1")), WordCombination(w_("e1")));
  EXPECT_EQ(reduce_word(rs, w_("e1 e1")), WordCombination(w_("e1"), x_value()));
  EXPECT_EQ(reduce_word(rs, w_("g1 e1")), WordCombination(w_("e1"), linv()));
  EXPECT_EQ(reduce_word(rs, w_("e1 g2 e1")), WordCombination(w_("e1"), l()));
  EXPECT_EQ(reduce_word(rs, w_("g2 g1 g2")), WordCombination(w_("g1 g2 g1")));
  EXPECT_EQ(reduce_word(rs, BmwWord{}), WordCombination(BmwWord{}));
}

TEST(Reduce, InverseExpansion) {
  auto rs = rs_of("A2");
  WordCombination want;
  want.add(w_("g1"), Scalar(1));
  want.add(BmwWord{}, m());
  want.add(w_("e1"), -m());
  EXPECT_EQ(reduce_word(rs, w_("G1")), want);
  EXPECT_EQ(reduce_word(rs, w_("g1 G1")), WordCombination(BmwWord{}));
}

TEST(Reduce, A2LengthFourClosesOnBasis) {
  auto rs = rs_of("A2");
  std::set<BmwWord> basis;
  for (const char* s : kA2Basis) basis.insert(w_(s));
  WordReducer red(rs);
  for (int code = 0; code < 256; ++code) {
    BmwWord w;
    for (int k = 0; k < 4; ++k) {
      int d = (code >> (2 * k)) & 3;
      w.push_back({d & 1, (d & 2) ? Kind::e : Kind::g});
    }
    for (const auto& [v, c] : red.reduce(w).terms())
      EXPECT_TRUE(basis.count(v)) << to_string(w) << " -> " << to_string(v);
  }
  // The basis words themselves are irreducible.
  for (const auto& b : basis) EXPECT_EQ(red.reduce(b), WordCombination(b)) << to_string(b);
}

TEST(RepImage, EmptyWordAndBraidB4) {
  auto rs = rs_of("A2");
  LKRepresentation<HeckeModel> lk{HeckeModel(rs)};
  WordImages<HeckeModel> img(lk);
  auto id = img.of(BmwWord{});
  EXPECT_TRUE(id.lk == lk.identity());
  EXPECT_EQ(id.hecke, HeckeElement::unit(img.hecke_algebra()));
  EXPECT_TRUE(img.of(w_("e1 e2 e1")) == img.of(w_("e1")));
  EXPECT_TRUE(img.of(w_("g1 G1")) == id);
}

namespace {

template <class Model>
void soundness(const char* type, Model model, int count, std::uint64_t seed) {
  auto rs = rs_of(type);
  LKRepresentation<Model> lk{std::move(model)};
  WordImages<Model> img(lk);
  WordReducer red(rs);
  std::mt19937_64 rng(seed);
  const std::size_t bound = rs->num_positive();
  for (int t = 0; t < count; ++t) {
    BmwWord w = random_word(rng, rs->rank(), 12);
    WordCombination r = red.reduce(w);
    EXPECT_LE(r.max_length(), bound) << type << " " << to_string(w);
    EXPECT_TRUE(img.of(r) == img.of(w)) << type << " " << to_string(w) << " -> " << r.to_string();
  }
}

}  // namespace

TEST(RepImage, ReduceIsSoundA3) {
  auto rs = rs_of("A3");
  soundness("A3", HeckeModel(rs), 200, 11);
}

TEST(RepImage, ReduceIsSoundD4) {
  auto rs = rs_of("D4");
  soundness("D4", HeckeModel(rs), 200, 12);
}

TEST(Reduce, LongWordsMeetLengthBoundA4) {
  auto rs = rs_of("A4");
  WordReducer red(rs);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    BmwWord w = random_word(rng, 4, 16);
    EXPECT_LE(red.reduce(w).max_length(), rs->num_positive()) << to_string(w);
  }
}

TEST(Json, ScalarAndHeckeRoundTrip) {
  Scalar a = (Scalar(3) + m()) / (m() * m() + Scalar(1)) * l() + make_rational(-2, 3) * linv();
  Json j = to_json(a);
  EXPECT_EQ(scalar_from_json(j), a);
  EXPECT_EQ(Json::parse(j.dump()).dump(), j.dump());
  EXPECT_EQ(to_json(Scalar(0)).dump(), R"({"terms":[]})");
  EXPECT_EQ(to_json(m()).dump(), R"({"terms":[{"den":["1/1"],"lexp":0,"num":["0/1","1/1"]}]})");

  auto rs = rs_of("A3");
  auto h = make_full_hecke(rs);
  HeckeElement x = eval_signed_word(h, {{0, false}, {1, true}, {2, false}, {0, false}});
  EXPECT_EQ(hecke_from_json(h, to_json(x)), x);
}
