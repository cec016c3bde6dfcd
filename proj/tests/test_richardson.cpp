#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbita/richardson.hpp"

using namespace orbita;

namespace {

LeviType levi(std::vector<int> gl, int q) { return LeviType(std::move(gl), q); }

}  // namespace

TEST(Levi, ParseAndValidate) {
  EXPECT_EQ(parse_levi("6,3:0"), levi({6, 3}, 0));
  EXPECT_EQ(parse_levi(":4"), levi({}, 4));
  EXPECT_EQ(levi({6, 3}, 0).str(), "(6,3;0)");
  EXPECT_THROW(levi({1}, 2), Error);
  EXPECT_THROW(levi({1}, 3), Error);
  EXPECT_THROW(parse_levi("6,3"), Error);
  EXPECT_EQ(parse_levi("6,3:0II").side(), ParabolicSide::II);
  EXPECT_EQ(parse_levi("6,3:0I").side(), ParabolicSide::I);
  EXPECT_FALSE(parse_levi("6,3:0").side().has_value());
  EXPECT_THROW(parse_levi("1:4I"), Error);
}

TEST(Induce, Examples) {
  EXPECT_EQ(induce(levi({6, 3}, 0)), (Partition{4, 4, 4, 2, 2, 2}));
  EXPECT_EQ(induce(levi({1}, 4)), (Partition{3, 1, 1, 1}));
  EXPECT_EQ(induce(levi({5, 1}, 4)), (Partition{5, 3, 3, 3, 2}));
}

TEST(ISet, Examples) {
  EXPECT_EQ(i_set(levi({6, 3}, 0)), (std::vector<int>{3}));
  EXPECT_TRUE(i_set(levi({1}, 4)).empty());
  EXPECT_EQ(i_set(levi({5, 1}, 4)), (std::vector<int>{5}));
}

TEST(Richardson, Examples) {
  EXPECT_EQ(richardson_orbit(levi({6, 3}, 0)), (Partition{4, 4, 3, 3, 2, 2}));
  EXPECT_EQ(richardson_orbit(levi({1}, 4)), (Partition{3, 1, 1, 1}));
  EXPECT_EQ(richardson_orbit(levi({5, 1}, 4)), (Partition{5, 3, 3, 3, 1, 1}));
}

TEST(Springer, Examples) {
  EXPECT_EQ(springer_degree(levi({6, 3}, 0)).degree, 1u);
  EXPECT_EQ(springer_degree(levi({5, 1}, 4)).degree, 2u);
  const auto split = springer_degree(levi({2}, 0));
  EXPECT_EQ(split.degree, 1u);
  EXPECT_TRUE(split.very_even_split);
  EXPECT_FALSE(springer_degree(levi({6, 3}, 0)).very_even_split);
}

TEST(Polarizable, Examples) {
  EXPECT_TRUE(validate_polarizable(levi({6, 3}, 0), Partition{4, 4, 3, 3, 2, 2}).ok);
  EXPECT_TRUE(validate_polarizable(levi({1}, 4), Partition{3, 1, 1, 1}).ok);
  EXPECT_FALSE(validate_polarizable(levi({6, 3}, 0), Partition{4, 4, 4, 2, 2, 2}).ok);
}

TEST(Polarizations, WorkedExampleIsUnique) {
  const auto pols = polarizations(Partition{4, 4, 3, 3, 2, 2});
  ASSERT_EQ(pols.size(), 1u);
  EXPECT_EQ(pols.front(), levi({6, 3}, 0));
}

TEST(Polarizations, Examples) {
  const auto pols = polarizations(Partition{3, 1, 1, 1});
  EXPECT_NE(std::find(pols.begin(), pols.end(), levi({1}, 4)), pols.end());
  // not special, so no Levi type induces it
  EXPECT_TRUE(polarizations(Partition{5, 2, 2, 1}).empty());
}

TEST(Polarizations, SearchCap) {
  EXPECT_THROW(polarizations(Partition{13, 13}, 24), Error);
}

TEST(Property, AgainstOracleForEveryLevi) {
  for (int total = 2; total <= 16; total += 2)
    for (const auto& l : all_levi_types(total)) {
      EXPECT_EQ(induce(l).parts(), oracle::induce(l.gl_parts(), l.q())) << l.str();
      EXPECT_EQ(springer_degree(l).degree, oracle::springer(l.gl_parts(), l.q())) << l.str();
      const auto orbit = richardson_orbit(l);
      EXPECT_TRUE(oracle::special(orbit.parts())) << l.str();
      const auto expected = oracle::dominance_maximum(induce(l).parts());
      ASSERT_TRUE(expected.has_value());
      EXPECT_EQ(orbit.parts(), *expected) << l.str();
      const auto check = validate_polarizable(l, orbit);
      EXPECT_TRUE(check.ok) << l.str() << " " << check.clause << " " << check.detail;
    }
}
