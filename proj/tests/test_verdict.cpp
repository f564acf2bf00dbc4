#include <gtest/gtest.h>

#include "cubeloop/error.hpp"
#include "cubeloop/verdict.hpp"
#include "support/known_paths.hpp"

using namespace cubeloop;

namespace {

JordanPath path(const std::string& word, int n) { return validate(DirectionWord::parse(word, n)); }

}  // namespace

TEST(Verdict, EightEdgeEmbeddedness) {
  const std::map<std::string, bool> expected{{"gamma1", false}, {"gamma2", false}, {"gamma3", true},
                                             {"gamma4", true},  {"gamma5", false}, {"gamma6", true},
                                             {"gamma7", true},  {"gamma8", true}};
  for (const auto& k : known::kR4) {
    const auto v = decide_embedded(path(k.word, 4), VerifyOptions::all());
    EXPECT_EQ(v.embedded, expected.at(k.name)) << k.name;
    ASSERT_TRUE(v.checks);
    EXPECT_EQ(*v.checks->closure_embedded, v.embedded);
    EXPECT_EQ(*v.checks->geometric_embedded, v.embedded);
  }
}

TEST(Verdict, SQOrders) {
  EXPECT_EQ(decide_embedded(path("123123", 3)).s_q_order, 32U);
  EXPECT_EQ(decide_embedded(path("12314234", 4)).s_q_order, 64U);
  EXPECT_EQ(decide_embedded(path("12341234", 4)).s_q_order, 256U);
}

TEST(Verdict, Genus) {
  EXPECT_EQ(euler_genus(path("12314234", 4)).genus, 9);
  EXPECT_EQ(euler_genus(path("1231413214", 4)).genus, 13);
  EXPECT_EQ(euler_genus(path("123214123214", 4)).genus, 17);
  EXPECT_EQ(euler_genus(path("12314234", 4)).euler, -16);
  const auto d = euler_genus(path("123123", 3));
  EXPECT_EQ(d.euler, -2);
  EXPECT_FALSE(d.genus);
  try {
    euler_genus(path("12341234", 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SurfaceNotEmbedded);
  }
}

TEST(Verdict, Orientability) {
  const auto even = decide_orientable(path("12314234", 4));
  EXPECT_TRUE(even.sigma && even.quotient_lambda0 && even.quotient_two_z);
  const auto odd = decide_orientable(path(known::kOddNonOrientable.word, 5));
  EXPECT_FALSE(odd.sigma);
  EXPECT_FALSE(odd.quotient_lambda0);
  EXPECT_FALSE(odd.quotient_two_z);
  const auto d = decide_orientable(path("123123", 3));
  EXPECT_TRUE(d.sigma);
  EXPECT_TRUE(d.quotient_lambda0);
  EXPECT_FALSE(d.quotient_two_z);
}

TEST(Verdict, EdgeBounds) {
  EXPECT_EQ(edge_bound(4, 12).status, Admissibility::MaybeEmbedded);
  const auto b = edge_bound(4, 14);
  EXPECT_EQ(b.status, Admissibility::RuledOut);
  EXPECT_EQ(b.violated, BoundKind::EvenDimension);
  EXPECT_EQ(b.limit, 12);
  EXPECT_EQ(edge_bound(3, 10).violated, BoundKind::SimpleCycle);
  EXPECT_EQ(edge_bound(5, 34).violated, BoundKind::SimpleCycle);
  EXPECT_EQ(edge_bound(7, 52).violated, BoundKind::OddDimensionHeuristic);
  EXPECT_EQ(edge_bound(7, 50).status, Admissibility::MaybeEmbedded);
  EXPECT_THROW(edge_bound(4, 7), Error);
  EXPECT_THROW(edge_bound(4, 6), Error);
}

TEST(Verdict, LongPathRuledOutAndNotEmbedded) {
  const JordanPath p = path(known::kLongR4.word, 4);
  EXPECT_EQ(edge_bound(4, 14).status, Admissibility::RuledOut);
  EXPECT_FALSE(decide_embedded(p, VerifyOptions::all()).embedded);
  const auto r = report(p);
  EXPECT_EQ(r.bounds.status, Admissibility::RuledOut);
  EXPECT_FALSE(r.genus);
}

TEST(Verdict, PerDirectionBound) {
  const auto d = per_direction_bound(path("123214123214", 4));
  EXPECT_EQ(d.status, Admissibility::MaybeEmbedded);
  EXPECT_EQ(d.zero_coordinates, (std::vector<int>{1, 2}));
  EXPECT_EQ(per_direction_bound(path("123123", 3)).status, Admissibility::NotApplicable);
  EXPECT_EQ(per_direction_bound(path("1213121412131214", 4)).status, Admissibility::RuledOut);
}

TEST(Verdict, ReportNotes) {
  const auto r = report(path("12321434", 4));
  EXPECT_TRUE(r.embedded);
  ASSERT_EQ(r.symmetries.size(), 1U);
  EXPECT_EQ(r.genus, 9);
  const auto d = report(path("123123", 3), {VerifyOptions::all()});
  ASSERT_TRUE(d.exceptional);
  EXPECT_EQ(d.checks->closure_order, 32U);
  EXPECT_EQ(d.checks->max_vertex_multiplicity, 4);
}
