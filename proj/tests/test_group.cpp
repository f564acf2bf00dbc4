#include <gtest/gtest.h>

#include <random>

#include "cubeloop/error.hpp"
#include "cubeloop/group.hpp"
#include "support/oracles.hpp"

using namespace cubeloop;

namespace {

std::vector<int> random_u_vector(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> v(n);
    int odd = 0;
    for (int& x : v) {
      x = static_cast<int>(rng() % 4);
      odd += x % 2;
    }
    if (n % 2 == 0 || odd % 2 == 0) return v;
  }
}

}  // namespace

TEST(Group, ComposeWorkedExample) {
  const std::vector<int> a{0, 1, 1, 1}, b{0, 3, 1, 1};
  const auto c = compose_quotient(QuotientElement::from_translation(a), QuotientElement::from_translation(b));
  EXPECT_EQ(c.translation(), (std::vector<int>{0, 2, 0, 0}));
  EXPECT_TRUE(c.rotation().is_identity());

  const auto ref = oracle::reduce4(oracle::compose(oracle::from_translation(a), oracle::from_translation(b)));
  EXPECT_EQ(ref, oracle::from_translation({0, 2, 0, 0}));
}

TEST(Group, ComposeMatchesAffineMapsAndCommutes) {
  std::mt19937_64 rng(20240611);
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 10000; ++trial) {
      const auto va = random_u_vector(n, rng), vb = random_u_vector(n, rng);
      const auto a = QuotientElement::from_translation(va);
      const auto b = QuotientElement::from_translation(vb);
      const auto ab = compose_quotient(a, b);
      const auto ref = oracle::reduce4(oracle::compose(oracle::from_translation(va), oracle::from_translation(vb)));
      ASSERT_EQ(oracle::from_translation(ab.translation()), ref) << to_string(a) << " " << to_string(b);
      ASSERT_EQ(ab, compose_quotient(b, a));
      ASSERT_TRUE(compose_quotient(a, a).is_identity());
    }
  }
}

TEST(Group, AmbientCompositionProjects) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4;
    AmbientElement a{{}, Rotation::identity(n)}, b{{}, Rotation::identity(n)};
    std::vector<int> ra(n), rb(n);
    for (int i = 0; i < n; ++i) {
      a.translation.push_back(static_cast<long long>(rng() % 21) - 10);
      b.translation.push_back(static_cast<long long>(rng() % 21) - 10);
      ra[i] = static_cast<int>(oracle::mod(a.translation[i], 2));
      rb[i] = static_cast<int>(oracle::mod(b.translation[i], 2));
    }
    a.rotation = Rotation::from_components(ra);
    b.rotation = Rotation::from_components(rb);
    ASSERT_TRUE(a.in_u());
    const auto ab = compose_ambient(a, b);
    EXPECT_EQ(project(ab), compose_quotient(project(a), project(b)));
    oracle::Affine fa{{}, a.translation}, fb{{}, b.translation};
    for (int i = 0; i < n; ++i) {
      fa.sign.push_back(ra[i] ? -1 : 1);
      fb.sign.push_back(rb[i] ? -1 : 1);
    }
    EXPECT_EQ(ab.translation, oracle::compose(fa, fb).offset);
  }
}

TEST(Group, Orders) {
  EXPECT_EQ(h_order(4), 16U);
  EXPECT_EQ(h_order(5), 16U);
  EXPECT_EQ(u_quotient_order(4), 256U);
  EXPECT_EQ(u_quotient_order(3), 32U);
  EXPECT_EQ(cube_edge_generators(4).size(), 4U * 8U);
  EXPECT_EQ(cube_edge_generators(3).size(), 3U * 4U);
}

TEST(Group, CubeEdgeGeneratorsAreEdgeHalfTurns) {
  for (int n : {2, 3, 4, 5}) {
    std::set<oracle::Affine> expected;
    for (int beta = 1; beta <= n; ++beta) {
      for (std::uint32_t v = 0; v < (1U << n); ++v) {
        if (v & (1U << (beta - 1))) continue;
        oracle::Affine a{std::vector<int>(n, -1), std::vector<long long>(n, 0)};
        for (int c = 0; c < n; ++c) {
          if (c == beta - 1) a.sign[c] = 1;
          else a.offset[c] = oracle::mod((v >> c) & 1U ? -1 : 1, 4);
        }
        expected.insert(a);
      }
    }
    std::set<oracle::Affine> got;
    for (const auto& g : cube_edge_generators(n)) got.insert(oracle::from_translation(g.translation()));
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(Group, Errors) {
  const std::vector<int> bad{1, 0, 0};
  try {
    QuotientElement::from_translation(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInU);
  }
  EXPECT_THROW(check_dim(1), Error);
  EXPECT_THROW(check_dim(kMaxDim + 1), Error);
  const AmbientElement odd{{1, 0, 0}, Rotation(3, 1)};
  EXPECT_THROW(project(odd), Error);
  const AmbientElement mismatched{{1, 1, 0}, Rotation(3, 0)};
  EXPECT_THROW(project(mismatched), Error);
}

TEST(Group, NegativeEntriesReduce) {
  const std::vector<int> v{-1, -3, 5, 2};
  EXPECT_EQ(QuotientElement::from_translation(v).translation(), (std::vector<int>{3, 1, 1, 2}));
}
