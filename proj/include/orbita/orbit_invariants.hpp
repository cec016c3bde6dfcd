#pragma once

// Spaltenstein degree partition, Kazhdan-Lusztig pair, cover invariants,
// ramification count and the eta sequence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "orbita/partition.hpp"

namespace orbita {

struct DegPartition {
  std::vector<int> block_ordered;          // T_1', ..., T_l' concatenated
  std::vector<std::size_t> source_block;   // block index for each entry of block_ordered
  std::vector<BlockType> source_type;

  std::vector<int> sorted() const {
    std::vector<int> s = block_ordered;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }
  int total() const {
    int t = 0;
    for (int v : block_ordered) t += v;
    return t;
  }
};

inline DegPartition deg_partition(const Partition& d) {
  const auto blocks = decompose_blocks(d);
  DegPartition out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> parts = blocks[i].parts;
    if (blocks[i].type == BlockType::D2) {
      parts.front() -= 1;
      parts.back() += 1;
    }
    for (int v : parts) {
      out.block_ordered.push_back(v);
      out.source_block.push_back(i);
      out.source_type.push_back(blocks[i].type);
    }
  }
  return out;
}

struct KLPair {
  std::vector<int> alpha;
  std::vector<int> beta;

  int weight() const {
    int w = 0;
    for (int a : alpha) w += a;
    for (int b : beta) w += 2 * b;
    return w;
  }
};

inline KLPair kl_pair(const Partition& d) {
  const DegPartition deg = deg_partition(d);
  KLPair out;
  for (std::size_t j = 0; j < deg.block_ordered.size(); ++j) {
    const int e = deg.block_ordered[j];
    if (deg.source_type[j] == BlockType::D2) {
      if (e % 2 != 0) throw Error(ErrorCode::MalformedTypeD, "odd entry from a D2 block");
      out.beta.push_back(e / 2);
    } else {
      out.alpha.push_back(e);
    }
  }
  std::sort(out.alpha.begin(), out.alpha.end(), std::greater<>());
  std::sort(out.beta.begin(), out.beta.end(), std::greater<>());
  return out;
}

struct CoverInvariants {
  int beta_tilde = 0;
  int beta = 0;
  int c = 0;
  std::uint64_t local_cover_degree = 1;
};

inline CoverInvariants cover_invariants(const Partition& d) {
  const auto blocks = decompose_blocks(d);
  const DegPartition deg = deg_partition(d);
  CoverInvariants out;
  out.beta_tilde = static_cast<int>(
      std::count_if(deg.block_ordered.begin(), deg.block_ordered.end(), [](int e) { return e % 2 == 0; }));
  out.c = static_cast<int>(blocks.count(BlockType::D2));
  out.beta = out.beta_tilde - 2 * static_cast<int>(blocks.count(BlockType::D1Star));
  if (out.beta < out.c)
    throw Error(ErrorCode::MalformedTypeD, "negative cover exponent for " + d.str());
  out.local_cover_degree = std::uint64_t{1} << (out.beta - out.c);
  return out;
}

inline int ramification_count(const Partition& d) {
  int count = 0;
  const auto decomposition = decompose_blocks(d);
  for (const auto& b : decomposition.blocks())
    if (b.type == BlockType::D2) count += static_cast<int>(b.size());
  return count;
}

/// [eta_2, eta_4, ..., eta_2n] with eta_2i the least j whose prefix sum reaches 2i.
inline std::vector<int> eta_sequence(const Partition& d) {
  require_type_d(d);
  std::vector<int> eta;
  int prefix = 0;
  std::size_t j = 0;
  for (int target = 2; target <= d.total(); target += 2) {
    while (prefix < target) prefix += d.part(j++);
    eta.push_back(static_cast<int>(j));
  }
  if (eta.back() != static_cast<int>(d.size()) || eta.back() % 2 != 0)
    throw Error(ErrorCode::MalformedTypeD, "eta sequence does not end at an even part count");
  return eta;
}

inline bool self_dual_generic_fiber(const Partition& d) { return is_special(d); }

}  // namespace orbita
