#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "orbita/orbit_invariants.hpp"

using namespace orbita;

TEST(Deg, Examples) {
  EXPECT_EQ(deg_partition(Partition{4, 4, 3, 3, 2, 2}).block_ordered, (std::vector<int>{4, 4, 3, 3, 2, 2}));
  EXPECT_EQ(deg_partition(Partition{5, 2, 2, 1}).block_ordered, (std::vector<int>{4, 2, 2, 2}));
  EXPECT_EQ(deg_partition(Partition{3, 1}).block_ordered, (std::vector<int>{2, 2}));
}

TEST(Deg, KeepsBlockProvenance) {
  const auto deg = deg_partition(Partition{7, 4, 4, 3, 3, 1});
  ASSERT_EQ(deg.block_ordered.size(), deg.source_block.size());
  EXPECT_EQ(deg.source_type.front(), BlockType::D2);
  EXPECT_EQ(deg.source_type.back(), BlockType::D2);
}

TEST(KL, Examples) {
  const auto a = kl_pair(Partition{4, 4, 3, 3, 2, 2});
  EXPECT_EQ(a.alpha, (std::vector<int>{4, 4, 3, 3, 2, 2}));
  EXPECT_TRUE(a.beta.empty());
  const auto b = kl_pair(Partition{5, 2, 2, 1});
  EXPECT_TRUE(b.alpha.empty());
  EXPECT_EQ(b.beta, (std::vector<int>{2, 1, 1, 1}));
  const auto c = kl_pair(Partition{3, 3});
  EXPECT_EQ(c.alpha, (std::vector<int>{3, 3}));
  EXPECT_TRUE(c.beta.empty());
}

TEST(Cover, Examples) {
  auto check = [](Partition d, int bt, int b, int c, std::uint64_t deg) {
    const auto v = cover_invariants(d);
    EXPECT_EQ(v.beta_tilde, bt) << d.str();
    EXPECT_EQ(v.beta, b) << d.str();
    EXPECT_EQ(v.c, c) << d.str();
    EXPECT_EQ(v.local_cover_degree, deg) << d.str();
  };
  check(Partition{4, 4, 3, 3, 2, 2}, 4, 0, 0, 1);
  check(Partition{5, 2, 2, 1}, 4, 4, 1, 8);
  check(Partition{3, 3}, 0, 0, 0, 1);
}

TEST(Ramification, Examples) {
  EXPECT_EQ(ramification_count(Partition{5, 2, 2, 1}), 4);
  EXPECT_EQ(ramification_count(Partition{4, 4, 3, 3, 2, 2}), 0);
  EXPECT_EQ(ramification_count(Partition{3, 1}), 2);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta_sequence(Partition{3, 1}), (std::vector<int>{1, 2}));
  EXPECT_EQ(eta_sequence(Partition{2, 2}), (std::vector<int>{1, 2}));
  // prefix sums 4,8,11,14,16,18: the target 14 is reached at the fourth part
  EXPECT_EQ(eta_sequence(Partition{4, 4, 3, 3, 2, 2}), (std::vector<int>{1, 1, 2, 2, 3, 4, 4, 5, 6}));
}

TEST(SelfDual, Examples) {
  EXPECT_TRUE(self_dual_generic_fiber(Partition{4, 4, 3, 3, 2, 2}));
  EXPECT_FALSE(self_dual_generic_fiber(Partition{5, 2, 2, 1}));
  EXPECT_TRUE(self_dual_generic_fiber(Partition{1, 1}));
}

TEST(Property, InvariantsOverAllTypeD) {
  for (int total = 2; total <= 20; total += 2)
    for (const auto& d : type_d_partitions(total)) {
      const auto kl = kl_pair(d);
      const int a = std::accumulate(kl.alpha.begin(), kl.alpha.end(), 0);
      const int b = std::accumulate(kl.beta.begin(), kl.beta.end(), 0);
      EXPECT_EQ(a + 2 * b, total) << d.str();

      const auto eta = eta_sequence(d);
      EXPECT_EQ(eta, oracle::eta(d.parts())) << d.str();
      EXPECT_EQ(eta.back(), static_cast<int>(d.size()));
      EXPECT_EQ(eta.back() % 2, 0);

      EXPECT_EQ(deg_partition(d).total(), total);
      EXPECT_EQ(self_dual_generic_fiber(d), oracle::special_by_blocks(d.parts())) << d.str();

      const auto cov = cover_invariants(d);
      EXPECT_GE(cov.beta, cov.c);
    }
}
