#include <random>
#include <vector>

#include "doctest.h"
#include "mua/qz.hpp"

using mua::ChoiceSeq;
using mua::Distance;
using mua::ExtNat;

namespace {

const ExtNat kInf = ExtNat::infinity();

ChoiceSeq seq(ExtNat def, std::vector<std::pair<int, ExtNat>> entries = {}) {
  return mua::make_choice_seq(def, std::move(entries));
}

ChoiceSeq random_seq(std::mt19937& rng) {
  std::uniform_int_distribution<int> val(0, 3), count(0, 3), pos(0, 5);
  auto pick = [&]() { return val(rng) == 3 ? kInf : ExtNat(val(rng)); };
  std::vector<std::pair<int, ExtNat>> entries;
  std::vector<char> used(6, 0);
  for (int i = count(rng); i > 0; --i) {
    int p = pos(rng);
    if (used[p]) continue;
    used[p] = 1;
    entries.push_back({p, pick()});
  }
  return mua::make_choice_seq(pick(), std::move(entries));
}

}  // namespace

TEST_SUITE_BEGIN("qz");

TEST_CASE("normalization drops defaults, sorts, rejects duplicates") {
  auto k = seq(kInf, {{3, ExtNat(2)}, {1, kInf}, {0, ExtNat(5)}});
  REQUIRE(k.exceptions.size() == 2);  // the explicit inf at 1 is redundant
  CHECK(k.exceptions[0].first == 0);
  CHECK(k.exceptions[1].first == 3);
  CHECK(k.at(0) == ExtNat(5));
  CHECK(k.at(1) == kInf);
  CHECK(k.at(3) == ExtNat(2));
  CHECK(k.at(100) == kInf);
  CHECK_THROWS_AS(seq(kInf, {{2, ExtNat(1)}, {2, ExtNat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(seq(kInf, {{-1, ExtNat(1)}}), std::invalid_argument);
}

TEST_CASE("the sequence grammar round-trips") {
  CHECK(mua::parse_choice_seq("default=inf") == seq(kInf));
  CHECK(mua::parse_choice_seq("default=0") == seq(ExtNat(0)));
  CHECK(mua::parse_choice_seq("default=inf;0:3,5:2") ==
        seq(kInf, {{0, ExtNat(3)}, {5, ExtNat(2)}}));
  CHECK(mua::parse_choice_seq("default=2;4:inf") == seq(ExtNat(2), {{4, kInf}}));
  // redundant entries normalize away
  CHECK(mua::parse_choice_seq("default=7;1:7") == seq(ExtNat(7)));
  CHECK_THROWS_AS(mua::parse_choice_seq(""), mua::ParseError);
  CHECK_THROWS_AS(mua::parse_choice_seq("default="), mua::ParseError);
  CHECK_THROWS_AS(mua::parse_choice_seq("0:3"), mua::ParseError);
  CHECK_THROWS_AS(mua::parse_choice_seq("default=inf;"), mua::ParseError);
  CHECK_THROWS_AS(mua::parse_choice_seq("default=inf;0:1,0:2"), mua::ParseError);
  CHECK_THROWS_AS(mua::parse_choice_seq("default=inf;x:1"), mua::ParseError);
}

TEST_CASE("equivalence compares infinity patterns and finite differences") {
  CHECK_FALSE(mua::seq_equiv(seq(kInf), seq(kInf, {{0, ExtNat(3)}})));
  CHECK(mua::seq_equiv(seq(kInf, {{0, ExtNat(3)}}),
                       seq(kInf, {{0, ExtNat(5)}})));
  // the infinity patterns must agree at every position, so a single
  // finite-against-infinite entry breaks equivalence
  CHECK_FALSE(mua::seq_equiv(seq(kInf, {{0, ExtNat(3)}}),
                             seq(kInf, {{0, ExtNat(5)}, {2, ExtNat(1)}})));
  CHECK_FALSE(mua::seq_equiv(seq(ExtNat(0)), seq(kInf)));
  CHECK_FALSE(mua::seq_equiv(seq(ExtNat(0)), seq(ExtNat(1))));
  CHECK(mua::seq_equiv(seq(ExtNat(0)), seq(ExtNat(0), {{4, ExtNat(9)}})));
}

TEST_CASE("precedence adds the pointwise bound") {
  auto k = seq(kInf, {{0, ExtNat(2)}});
  CHECK(mua::seq_preceq(k, k));
  CHECK(mua::seq_preceq(k, seq(kInf, {{0, ExtNat(3)}})));
  CHECK_FALSE(mua::seq_preceq(seq(kInf, {{0, ExtNat(3)}}), k));
  CHECK_FALSE(mua::seq_preceq(seq(kInf, {{0, ExtNat(2)}, {1, ExtNat(5)}}),
                              seq(kInf, {{0, ExtNat(3)}, {1, ExtNat(4)}})));
  // pointwise <= is not enough: swapping a finite entry for an infinite
  // one changes the infinity pattern and kills the equivalence
  CHECK_FALSE(mua::seq_preceq(seq(ExtNat(1)), seq(ExtNat(1), {{2, kInf}})));
  CHECK(mua::seq_preceq(seq(ExtNat(1)), seq(ExtNat(1), {{2, ExtNat(9)}})));
}

TEST_CASE("distance hits all four closed-form cases") {
  CHECK(mua::qz_distance(seq(kInf), seq(kInf)).finite() == 0);
  CHECK(mua::qz_distance(seq(kInf, {{0, ExtNat(2)}}),
                         seq(kInf, {{0, ExtNat(4)}})).finite() == 1);
  // equivalent but incomparable both ways
  auto k = seq(kInf, {{0, ExtNat(1)}, {1, ExtNat(2)}});
  auto k2 = seq(kInf, {{0, ExtNat(2)}, {1, ExtNat(1)}});
  CHECK(mua::qz_distance(k, k2).finite() == 2);
  CHECK(mua::qz_distance(seq(ExtNat(0)), seq(ExtNat(0), {{0, kInf}})).is_infinite());
  // mismatched infinity patterns are infinitely far apart
  CHECK(mua::qz_distance(seq(kInf, {{0, ExtNat(1)}}),
                         seq(kInf, {{1, ExtNat(1)}})).is_infinite());
}

TEST_CASE("the pointwise maximum realizes the two-step path") {
  auto k = seq(kInf, {{0, ExtNat(1)}, {1, ExtNat(2)}});
  auto k2 = seq(kInf, {{0, ExtNat(2)}, {1, ExtNat(1)}});
  auto join = seq(kInf, {{0, ExtNat(2)}, {1, ExtNat(2)}});
  CHECK(mua::qz_distance(k, join).finite() == 1);
  CHECK(mua::qz_distance(join, k2).finite() == 1);
}

TEST_CASE("diameter depends only on the count of finite positions") {
  CHECK(mua::qz_diameter(seq(kInf)).finite() == 0);
  CHECK(mua::qz_diameter(seq(kInf, {{3, ExtNat(7)}})).finite() == 1);
  CHECK(mua::qz_diameter(seq(kInf, {{0, ExtNat(1)}, {5, ExtNat(0)}})).finite() == 2);
  CHECK(mua::qz_diameter(seq(ExtNat(0))).finite() == 2);
  CHECK(mua::qz_diameter(seq(ExtNat(4), {{0, kInf}})).finite() == 2);
}

TEST_CASE("distance is a metric-like form on random triples") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 4000; ++trial) {
    auto a = random_seq(rng);
    auto b = random_seq(rng);
    auto c = random_seq(rng);
    auto d_ab = mua::qz_distance(a, b);
    CHECK(d_ab == mua::qz_distance(b, a));
    CHECK((d_ab == Distance(0)) == (a == b));
    // triangle with absorbing infinity
    auto d_ac = mua::qz_distance(a, c);
    auto d_cb = mua::qz_distance(c, b);
    CHECK(d_ab <= d_ac + d_cb);
    // distances within an equivalence class never exceed the diameter bound 2
    if (mua::seq_equiv(a, b)) CHECK(d_ab <= Distance(2));
  }
}

TEST_SUITE_END();
