#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbita/partition.hpp"

using namespace orbita;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

std::string types_of(const BlockDecomposition& b) {
  std::string s;
  for (const auto& blk : b.blocks()) s += blk.type == BlockType::D1 ? 'A' : blk.type == BlockType::D1Star ? 'S' : 'B';
  return s;
}

}  // namespace

TEST(Partition, ParsesAndSorts) {
  const auto p = parse_partition("4,4,3,3,2,2");
  EXPECT_EQ(p.parts(), (std::vector<int>{4, 4, 3, 3, 2, 2}));
  EXPECT_EQ(p.total(), 18);
  EXPECT_EQ(parse_partition("1,1"), (Partition{1, 1}));
  EXPECT_EQ(parse_partition("2,4,4,3,2,3"), (Partition{4, 4, 3, 3, 2, 2}));
}

TEST(Partition, RejectsBadInput) {
  EXPECT_EQ(code_of([] { parse_partition("3"); }), ErrorCode::OddTotal);
  EXPECT_EQ(code_of([] { parse_partition("2,0"); }), ErrorCode::NonPositivePart);
  EXPECT_EQ(code_of([] { parse_partition(""); }), ErrorCode::EmptyPartition);
  EXPECT_EQ(code_of([] { parse_partition("2,x"); }), ErrorCode::ParseError);
}

TEST(Partition, EpsMembership) {
  EXPECT_TRUE(eps_membership(Partition{4, 4, 3, 3, 2, 2}, 1));
  EXPECT_FALSE(eps_membership(Partition{2}, 1));
  EXPECT_TRUE(eps_membership(Partition{6, 6, 4, 2}, -1));
}

TEST(Partition, Transpose) {
  EXPECT_EQ(transpose(Partition{4, 4, 3, 3, 2, 2}), (Partition{6, 6, 4, 2}));
  EXPECT_EQ(transpose(Partition{1, 1}), (Partition{2}));
  EXPECT_EQ(transpose(Partition{5, 2, 2, 1}), (Partition{4, 3, 1, 1, 1}));
}

TEST(Partition, Speciality) {
  EXPECT_TRUE(is_special(Partition{4, 4, 3, 3, 2, 2}));
  EXPECT_FALSE(is_special(Partition{5, 2, 2, 1}));
  EXPECT_TRUE(is_special(Partition{1, 1}));
}

TEST(Partition, VeryEven) {
  EXPECT_TRUE(is_very_even(Partition{2, 2}));
  EXPECT_TRUE(is_very_even(Partition{4, 4, 2, 2}));
  EXPECT_FALSE(is_very_even(Partition{3, 1}));
}

TEST(Blocks, WorkedExamples) {
  const auto b = decompose_blocks(Partition{4, 4, 3, 3, 2, 2});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(types_of(b), "SAS");
  EXPECT_EQ(b[0].parts, (std::vector<int>{4, 4}));
  EXPECT_EQ(b[1].parts, (std::vector<int>{3, 3}));
  EXPECT_EQ(b[2].parts, (std::vector<int>{2, 2}));

  const auto c = decompose_blocks(Partition{5, 2, 2, 1});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].type, BlockType::D2);
  EXPECT_EQ(c[0].k(), 1u);

  const auto d = decompose_blocks(Partition{3, 1});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].type, BlockType::D2);
  EXPECT_EQ(d[0].k(), 0u);
}

TEST(Blocks, RejectsNonTypeD) {
  EXPECT_EQ(code_of([] { decompose_blocks(Partition{4, 2}); }), ErrorCode::NotTypeD);
}

TEST(Blocks, GreedyIsTheUniqueSegmentation) {
  for (int total = 2; total <= 18; total += 2)
    for (const auto& d : type_d_partitions(total)) {
      const auto segs = oracle::segmentations(d.parts());
      ASSERT_EQ(segs.size(), 1u) << d.str();
      const auto b = decompose_blocks(d);
      EXPECT_EQ(types_of(b), oracle::type_string(segs.front())) << d.str();
      EXPECT_EQ(b.concatenated(), d.parts());
    }
}

TEST(Collapse, Examples) {
  EXPECT_EQ(d_collapse(Partition{4, 4, 4, 2, 2, 2}), (Partition{4, 4, 3, 3, 2, 2}));
  EXPECT_EQ(d_collapse(Partition{3, 3}), (Partition{3, 3}));
  EXPECT_EQ(d_collapse(Partition{2}), (Partition{1, 1}));
  EXPECT_EQ(d_collapse(Partition{4, 4, 4, 4, 2}), (Partition{4, 4, 4, 4, 1, 1}));
}

TEST(Collapse, MatchesDominanceOracle) {
  for (int total = 2; total <= 14; total += 2)
    for (const auto& parts : oracle::partitions_of(total)) {
      const Partition p(parts);
      const auto expected = oracle::dominance_maximum(parts);
      ASSERT_TRUE(expected.has_value()) << p.str();
      EXPECT_EQ(d_collapse(p).parts(), *expected) << p.str();
    }
}

TEST(Collapse, IdempotentOnTypeD) {
  for (int total = 2; total <= 16; total += 2)
    for (const auto& d : type_d_partitions(total)) EXPECT_EQ(d_collapse(d), d) << d.str();
}

TEST(Enumeration, AgreesWithOracleCounts) {
  for (int total = 2; total <= 20; total += 2) {
    const auto mine = all_partitions(total);
    const auto ref = oracle::partitions_of(total);
    EXPECT_EQ(mine.size(), ref.size()) << total;
  }
  // p(20) = 627
  EXPECT_EQ(oracle::partitions_of(20).size(), 627u);
}

TEST(Property, TransposeInvolutionAndSpeciality) {
  for (int total = 2; total <= 18; total += 2)
    for (const auto& d : type_d_partitions(total)) {
      EXPECT_EQ(transpose(transpose(d)), d);
      EXPECT_EQ(transpose(d).parts(), oracle::transpose(d.parts()));
      EXPECT_EQ(is_special(d), oracle::special(d.parts())) << d.str();
      EXPECT_EQ(is_special(d), oracle::special_by_blocks(d.parts())) << d.str();
    }
}

TEST(Property, DominanceIsAPartialOrder) {
  const auto parts = all_partitions(8);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      EXPECT_EQ(dominates(a, b), oracle::dominates(a.parts(), b.parts()));
      if (dominates(a, b) && dominates(b, a)) {
        EXPECT_EQ(a, b);
      }
    }
}
