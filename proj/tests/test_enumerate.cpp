#include <gtest/gtest.h>

#include "cubeloop/enumerate.hpp"
#include "cubeloop/error.hpp"
#include "cubeloop/lattice.hpp"
#include "support/oracles.hpp"

using namespace cubeloop;

namespace {

std::set<std::vector<int>> as_set(const std::vector<CanonicalWord>& classes) {
  std::set<std::vector<int>> out;
  for (const auto& c : classes) out.emplace(c.word().labels().begin(), c.word().labels().end());
  return out;
}

std::vector<std::string> strings(const std::vector<CanonicalWord>& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST(Enumerate, MatchesBruteForce) {
  EXPECT_EQ(as_set(enumerate_paths({.dim = 3})), oracle::brute_classes(3, 6, 8));
  EXPECT_EQ(as_set(enumerate_paths({.dim = 4})), oracle::brute_classes(4, 8, 16));
  EXPECT_EQ(as_set(enumerate_paths({.dim = 5, .max_length = 10})), oracle::brute_classes(5, 10, 10));
  EXPECT_EQ(as_set(enumerate_paths({.dim = 2})), oracle::brute_classes(2, 4, 4));
}

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(strings(enumerate_paths({.dim = 3})), (std::vector<std::string>{"121323", "123123", "12131213"}));
  EXPECT_EQ(enumerate_paths({.dim = 4, .min_length = 8, .max_length = 8}).size(), 6U);
  EXPECT_EQ(strings(enumerate_paths({.dim = 4, .embedded_only = true})),
            (std::vector<std::string>{"12134243", "12314234", "12314324", "1213412143", "121343121343"}));
}

TEST(Enumerate, EmbeddedOnlyIsAFilter) {
  std::vector<CanonicalWord> filtered;
  for (const auto& c : enumerate_paths({.dim = 4})) {
    if (decide_embedded(validate(c.word())).embedded) filtered.push_back(c);
  }
  EXPECT_EQ(enumerate_paths({.dim = 4, .embedded_only = true}), filtered);
}

TEST(Enumerate, IndependentOfJobsAndSharding) {
  const auto ref = enumerate_paths({.dim = 4});
  EXPECT_EQ(enumerate_paths({.dim = 4}, 4), ref);
  EXPECT_EQ(enumerate_paths({.dim = 4, .prefix_depth = 1}, 3), ref);
  EXPECT_EQ(enumerate_paths({.dim = 4, .prefix_depth = 6}, 8), ref);
  EXPECT_EQ(enumerate_paths({.dim = 4, .first_direction = 3}, 2), ref);
}

TEST(Enumerate, Sorted) {
  const auto all = enumerate_paths({.dim = 4});
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].length(), all[i].length());
}

TEST(Enumerate, Limit) {
  const auto few = enumerate_paths({.dim = 4, .limit = 4});
  ASSERT_EQ(few.size(), 4U);
  const auto all = enumerate_paths({.dim = 4});
  EXPECT_TRUE(std::equal(few.begin(), few.end(), all.begin()));
}

TEST(Enumerate, BadQueries) {
  EXPECT_THROW(check_query({.dim = 1}), Error);
  EXPECT_THROW(check_query({.dim = 4, .min_length = 7, .max_length = 8}), Error);
  EXPECT_THROW(check_query({.dim = 4, .min_length = 6}), Error);
  EXPECT_THROW(check_query({.dim = 4, .max_length = 18}), Error);
  EXPECT_THROW(check_query({.dim = 4, .min_length = 12, .max_length = 10}), Error);
  EXPECT_THROW(check_query({.dim = 4, .first_direction = 5}), Error);
  EXPECT_THROW(check_query({.dim = 4, .prefix_depth = 0}), Error);
}

TEST(Families, Words) {
  EXPECT_EQ(family_word({Family::DSeries, 5}).spaced(), "1 2 3 4 5 1 2 5 4 3");
  EXPECT_EQ(family_word({Family::DSeries, 3}).compact(), "123123");
  EXPECT_EQ(family_word({Family::Sharp, 6}).length(), 20U);
  EXPECT_EQ(family_word({Family::Sharp, 4}).compact(), "134243134243");
  EXPECT_EQ(family_word({Family::GammaA, 4, 0, 2}).compact(), "12342143");
  EXPECT_EQ(family_word({Family::GammaB, 4, 1, 3}).compact(), "12341324");
  EXPECT_EQ(family_word({Family::GammaC, 4, 1, 3}).compact(), "123432123432");
  EXPECT_THROW(family_word({Family::GammaA, 4, 0, 4}), Error);
  EXPECT_THROW(family_word({Family::GammaB, 4, 2, 2}), Error);
  EXPECT_THROW(family_word({Family::DSeries, 2}), Error);
  EXPECT_EQ(parse_family("gamma-b"), Family::GammaB);
  EXPECT_FALSE(parse_family("gamma-z"));
}

TEST(Families, MemberCounts) {
  EXPECT_EQ(family_members(Family::GammaA, 6).size(), 5U);
  EXPECT_EQ(family_members(Family::GammaB, 6).size(), 10U);
  EXPECT_EQ(family_members(Family::GammaC, 4).size(), 3U);
  EXPECT_EQ(family_members(Family::Sharp, 7).size(), 1U);
}

TEST(Families, EmbeddedAndOrientable) {
  for (int n = 4; n <= 8; ++n) {
    for (Family f : {Family::GammaA, Family::GammaB, Family::GammaC, Family::DSeries, Family::Sharp}) {
      for (const auto& spec : family_members(f, n)) {
        const JordanPath p = validate(family_word(spec));
        ASSERT_TRUE(decide_embedded(p).embedded) << to_string(f) << " " << p.word().to_string();
        ASSERT_TRUE(decide_orientable(p).sigma) << to_string(f) << " " << p.word().to_string();
      }
    }
  }
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(lambda0(validate(family_word({Family::DSeries, n}))).order(), 4U);
}

TEST(Families, EmbeddedR4ClassesBelongToFamilies) {
  std::set<CanonicalWord> family_classes;
  for (Family f : {Family::GammaA, Family::GammaB, Family::GammaC, Family::DSeries, Family::Sharp}) {
    for (const auto& spec : family_members(f, 4)) family_classes.insert(canonicalize(family_word(spec)));
  }
  for (const auto& c : enumerate_paths({.dim = 4, .embedded_only = true})) {
    EXPECT_TRUE(family_classes.count(c)) << c.to_string();
  }
}

TEST(Families, ExpandSeries) {
  const JordanPath d = validate(DirectionWord::parse("123123", 3));
  EXPECT_EQ(expand_series(d, 5, 1).compact(), "1452354123");
  const JordanPath full = validate(DirectionWord::parse("12341234", 4));
  EXPECT_THROW(expand_series(full, 5, 1), Error);
  EXPECT_THROW(expand_series(d, 3, 1), Error);
  EXPECT_THROW(expand_series(d, 5, 4), Error);
}

TEST(Families, SeriesCheck) {
  const auto entries = series_check(6);
  std::size_t lifts = 0;
  for (const auto& e : entries) {
    EXPECT_TRUE(e.report.embedded) << e.family << " " << e.report.word.to_string();
    EXPECT_TRUE(e.report.orientable.sigma) << e.family << " " << e.report.word.to_string();
    lifts += e.seed.has_value();
  }
  EXPECT_GT(lifts, 0U);
}
