#pragma once

// Partitions of 2n, type-D membership, blocks and the D-collapse.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "orbita/error.hpp"

namespace orbita {

/// Non-increasing sequence of positive parts with even total. Trailing zeros
/// are never stored; `part(j)` reads past the end as zero.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::EmptyPartition, "partition has no parts");
    for (int p : parts_)
      if (p <= 0) throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (total_ % 2 != 0) throw Error(ErrorCode::OddTotal, "total " + std::to_string(total_));
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int total() const noexcept { return total_; }
  int rank() const noexcept { return total_ / 2; }

  /// 0-based access, zero beyond the last part.
  int part(std::size_t j) const noexcept { return j < parts_.size() ? parts_[j] : 0; }
  int operator[](std::size_t j) const noexcept { return part(j); }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(parts_[j]);
    }
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Comma-separated positive integers.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error(ErrorCode::ParseError, "empty token in '" + std::string(text) + "'");
    int value = 0;
    const char* first = tok.data();
    if (*first == '+') ++first;
    const bool negative = *first == '-';
    if (negative) ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(tok) + "'");
    if (negative) value = -value;
    if (value <= 0) throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(value));
    values.push_back(value);
    pos = comma + 1;
  }
  return values;
}

/// Comma-separated positive integers, in any order.
inline Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

/// True iff every part value i with (-1)^i == eps has even multiplicity.
inline bool eps_membership(const Partition& p, int eps) {
  std::map<int, int> mult;
  for (int v : p.parts()) ++mult[v];
  for (auto [value, count] : mult) {
    int sign = value % 2 == 0 ? 1 : -1;
    if (sign == eps && count % 2 != 0) return false;
  }
  return true;
}

inline bool is_type_d(const Partition& p) { return eps_membership(p, +1); }

inline void require_type_d(const Partition& p) {
  if (!is_type_d(p)) throw Error(ErrorCode::NotTypeD, p.str() + " has an even part of odd multiplicity");
}

inline Partition transpose(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
  for (int v : p.parts())
    for (int i = 0; i < v; ++i) ++cols[static_cast<std::size_t>(i)];
  return Partition(std::move(cols));
}

/// Dominance order with zero padding: a dominates b iff every prefix sum of a
/// is at least the corresponding prefix sum of b.
inline bool dominates(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) return false;
  const std::size_t len = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t j = 0; j < len; ++j) {
    sa += a.part(j);
    sb += b.part(j);
    if (sa < sb) return false;
  }
  return true;
}

inline bool is_special(const Partition& p) {
  require_type_d(p);
  return eps_membership(transpose(p), -1);
}

inline bool is_very_even(const Partition& p) {
  require_type_d(p);
  return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
}

enum class BlockType { D1, D1Star, D2 };

constexpr std::string_view to_string(BlockType t) noexcept {
  switch (t) {
    case BlockType::D1: return "D1";
    case BlockType::D1Star: return "D1*";
    case BlockType::D2: return "D2";
  }
  return "?";
}

struct Block {
  BlockType type;
  std::size_t start;       // offset of the first part in the parent partition
  std::vector<int> parts;

  std::size_t size() const noexcept { return parts.size(); }
  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  /// Number of even pairs inside a D2 block; zero for the other types.
  std::size_t k() const noexcept { return type == BlockType::D2 ? (parts.size() - 2) / 2 : 0; }

  friend bool operator==(const Block&, const Block&) = default;
};

/// Checks a single block against the D1 / D1* / D2 grammar.
inline bool block_is_well_formed(const Block& b) {
  const auto& v = b.parts;
  switch (b.type) {
    case BlockType::D1: return v.size() == 2 && v[0] == v[1] && v[0] % 2 == 1;
    case BlockType::D1Star: return v.size() == 2 && v[0] == v[1] && v[0] % 2 == 0;
    case BlockType::D2: {
      if (v.size() < 2 || v.size() % 2 != 0) return false;
      if (v.front() % 2 != 1 || v.back() % 2 != 1) return false;
      if (v.size() == 2) return v[0] > v[1];
      for (std::size_t j = 1; j + 1 < v.size(); j += 2)
        if (v[j] % 2 != 0 || v[j] != v[j + 1]) return false;
      for (std::size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j] < v[j + 1]) return false;
      return v[0] > v[1] && v[v.size() - 2] > v.back();
    }
  }
  return false;
}

class BlockDecomposition {
 public:
  BlockDecomposition() = default;
  explicit BlockDecomposition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  std::size_t count(BlockType t) const {
    return static_cast<std::size_t>(
        std::count_if(blocks_.begin(), blocks_.end(), [t](const Block& b) { return b.type == t; }));
  }

  std::vector<int> concatenated() const {
    std::vector<int> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.parts.begin(), b.parts.end());
    return out;
  }

  /// Index of the block containing part j (0-based).
  std::size_t block_of_part(std::size_t j) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (j >= blocks_[i].start && j < blocks_[i].start + blocks_[i].size()) return i;
    return blocks_.size();
  }

 private:
  std::vector<Block> blocks_;
};

/// Greedy left-to-right segmentation into D1 / D1* / D2 blocks.
inline BlockDecomposition decompose_blocks(const Partition& p) {
  require_type_d(p);
  const auto& d = p.parts();
  const std::size_t r = d.size();
  std::vector<Block> blocks;
  std::size_t j = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::MalformedTypeD, p.str() + ": " + why + " at part " + std::to_string(j + 1));
  };
  while (j < r) {
    const int a = d[j];
    if (a % 2 == 0) {
      if (j + 1 >= r || d[j + 1] != a) throw malformed("unpaired even part");
      blocks.push_back({BlockType::D1Star, j, {a, a}});
      j += 2;
    } else if (j + 1 < r && d[j + 1] == a) {
      blocks.push_back({BlockType::D1, j, {a, a}});
      j += 2;
    } else {
      Block b{BlockType::D2, j, {a}};
      ++j;
      while (j + 1 < r && d[j] % 2 == 0 && d[j + 1] == d[j]) {
        b.parts.push_back(d[j]);
        b.parts.push_back(d[j]);
        j += 2;
      }
      if (j >= r || d[j] % 2 == 0) throw malformed("D2 block cannot close");
      b.parts.push_back(d[j]);
      ++j;
      blocks.push_back(std::move(b));
    }
  }
  BlockDecomposition out(std::move(blocks));
  if (out.concatenated() != d) throw Error(ErrorCode::MalformedTypeD, "reconcatenation mismatch");
  for (const auto& b : out.blocks())
    if (!block_is_well_formed(b)) throw Error(ErrorCode::MalformedTypeD, p.str() + ": ill-formed block");
  return out;
}

/// Largest type-D partition dominated by p: repeatedly lower the last
/// occurrence of the largest bad even part and raise the first later part
/// that is smaller than the lowered value. Zero parts count as later parts.
inline Partition d_collapse(const Partition& p) {
  std::vector<int> v = p.parts();
  for (;;) {
    std::map<int, int, std::greater<>> mult;
    for (int x : v) ++mult[x];
    int k = 0;
    for (auto [value, count] : mult) {
      if (value % 2 == 0 && count % 2 == 1) {
        k = value;
        break;
      }
    }
    if (k == 0) break;
    std::size_t last = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] == k) last = j;
    v[last] = k - 1;
    std::size_t next = last + 1;
    while (next < v.size() && v[next] >= k - 1) ++next;
    if (next == v.size()) v.push_back(0);
    v[next] += 1;
  }
  return Partition(std::move(v));
}

/// Calls f(parts) for every partition of m, parts non-increasing, in reverse
/// lexicographic order. m == 0 yields the empty partition once.
template <typename F>
void for_each_integer_partition(int m, F&& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      f(static_cast<const std::vector<int>&>(cur));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(m, m);
}

inline std::vector<Partition> all_partitions(int total) {
  std::vector<Partition> out;
  for_each_integer_partition(total, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
  return out;
}

inline std::vector<Partition> type_d_partitions(int total) {
  std::vector<Partition> out;
  for_each_integer_partition(total, [&](const std::vector<int>& parts) {
    Partition p(parts);
    if (is_type_d(p)) out.push_back(std::move(p));
  });
  return out;
}

}  // namespace orbita
