#pragma once

// Levi types, induced partitions, I(P), Richardson orbits and Springer degrees.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orbita/partition.hpp"

namespace orbita {

enum class ParabolicSide { I, II };

constexpr std::string_view to_string(ParabolicSide s) noexcept { return s == ParabolicSide::I ? "I" : "II"; }

/// gl_{p_1} + ... + gl_{p_m} + so_q with q even and q != 2.
class LeviType {
 public:
  LeviType(std::vector<int> gl_parts, int q, std::optional<ParabolicSide> side = std::nullopt)
      : gl_(std::move(gl_parts)), q_(q), side_(side) {
    if (q_ < 0 || q_ % 2 != 0 || q_ == 2)
      throw Error(ErrorCode::InvalidLevi, "q must be even, non-negative and not 2, got " + std::to_string(q_));
    for (int p : gl_)
      if (p <= 0) throw Error(ErrorCode::InvalidLevi, "gl block size " + std::to_string(p));
    std::sort(gl_.begin(), gl_.end(), std::greater<>());
    int sum = 0;
    for (int p : gl_) sum += p;
    total_ = 2 * sum + q_;
    if (total_ == 0) throw Error(ErrorCode::InvalidLevi, "empty Levi type");
    if (side_ && q_ != 0) throw Error(ErrorCode::InvalidLevi, "side tag only applies when q = 0");
  }

  const std::vector<int>& gl_parts() const noexcept { return gl_; }
  int q() const noexcept { return q_; }
  int total() const noexcept { return total_; }
  int rank() const noexcept { return total_ / 2; }
  std::optional<ParabolicSide> side() const noexcept { return side_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gl_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(gl_[i]);
    }
    s += ";" + std::to_string(q_) + ")";
    if (side_) s += std::string(to_string(*side_));
    return s;
  }

  friend bool operator==(const LeviType& a, const LeviType& b) { return a.gl_ == b.gl_ && a.q_ == b.q_; }

 private:
  std::vector<int> gl_;
  int q_;
  int total_ = 0;
  std::optional<ParabolicSide> side_;
};

/// "6,3:0" or ":4" (empty gl part) or "1:4".
inline LeviType parse_levi(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "Levi type needs 'gl:q', got '" + std::string(text) + "'");
  std::vector<int> gl;
  std::string_view gl_text = text.substr(0, colon);
  if (!gl_text.empty()) gl = parse_int_list(gl_text);
  std::string_view q_text = text.substr(colon + 1);
  // optional side tag at q = 0: "6,3:0I" or "6,3:0II"
  std::optional<ParabolicSide> side;
  if (q_text.ends_with("II")) {
    side = ParabolicSide::II;
    q_text.remove_suffix(2);
  } else if (q_text.ends_with("I")) {
    side = ParabolicSide::I;
    q_text.remove_suffix(1);
  }
  int q = 0;
  auto [ptr, ec] = std::from_chars(q_text.data(), q_text.data() + q_text.size(), q);
  if (ec != std::errc() || ptr != q_text.data() + q_text.size() || q_text.empty())
    throw Error(ErrorCode::ParseError, "bad q in '" + std::string(text) + "'");
  return LeviType(std::move(gl), q, side);
}

/// Induced partition d_P: d'_j = 2 #{i : p_i >= j} + [j <= q].
inline Partition induce(const LeviType& levi) {
  const int len = std::max(levi.gl_parts().empty() ? 0 : levi.gl_parts().front(), levi.q());
  std::vector<int> parts;
  for (int j = 1; j <= len; ++j) {
    int count = 0;
    for (int p : levi.gl_parts())
      if (p >= j) ++count;
    const int v = 2 * count + (j <= levi.q() ? 1 : 0);
    if (v > 0) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

/// Odd 1-based indices j with d'_j even and d'_j >= d'_{j+1} + 2.
inline std::vector<int> i_set(const LeviType& levi) {
  const Partition dp = induce(levi);
  std::vector<int> out;
  for (std::size_t j = 0; j < dp.size(); j += 2) {
    const int v = dp.part(j);
    if (v % 2 == 0 && v >= dp.part(j + 1) + 2) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

inline Partition richardson_orbit(const LeviType& levi) { return d_collapse(induce(levi)); }

struct SpringerDegree {
  std::uint64_t degree = 1;
  bool very_even_split = false;
};

inline SpringerDegree springer_degree(const LeviType& levi) {
  const auto size = static_cast<int>(i_set(levi).size());
  if (levi.q() >= 4) return {std::uint64_t{1} << size, false};
  if (size == 0) return {1, true};
  return {std::uint64_t{1} << (size - 1), false};
}

struct PolarizableCheck {
  bool ok = true;
  std::string clause;   // first violated clause, empty when ok
  std::string detail;
};

/// Richardson identity plus the structural conditions a polarized partition
/// satisfies: two-part blocks, the first D1* index m0, and the I(P) clauses.
inline PolarizableCheck validate_polarizable(const LeviType& levi, const Partition& d) {
  auto fail = [](std::string clause, std::string detail) {
    return PolarizableCheck{false, std::move(clause), std::move(detail)};
  };
  if (!is_type_d(d)) return fail("type_d", d.str() + " is not of type D");
  if (d.total() != levi.total()) return fail("size", "total mismatch");
  const Partition orbit = richardson_orbit(levi);
  if (orbit != d) return fail("richardson", "induced orbit is " + orbit.str());

  const auto blocks = decompose_blocks(d);
  for (const auto& b : blocks.blocks())
    if (b.type == BlockType::D2 && b.k() >= 1) return fail("no_long_d2", "D2 block with even pairs");
  const std::size_t l = blocks.size();
  if (d.size() != 2 * l) return fail("two_part_blocks", "part count is not twice the block count");

  const auto iset = i_set(levi);
  const std::set<int> in_i(iset.begin(), iset.end());
  // 1-based block index of the first D1* block, l + 1 when absent.
  std::size_t m0 = l + 1;
  for (std::size_t i = 0; i < l; ++i)
    if (blocks[i].type == BlockType::D1Star) {
      m0 = i + 1;
      break;
    }
  for (std::size_t i = m0 + 1; i <= l; ++i) {
    if (blocks[i - 1].type != BlockType::D1Star && !in_i.count(static_cast<int>(2 * i - 1)))
      return fail("after_m0", "block " + std::to_string(i) + " is not D1* and " + std::to_string(2 * i - 1) +
                                  " is not in I(P)");
  }
  auto dpart = [&](std::size_t one_based) { return d.part(one_based - 1); };
  for (int odd : iset) {
    const auto i = static_cast<std::size_t>((odd + 1) / 2);
    if (i > l) return fail("index_range", std::to_string(odd) + " exceeds the part count");
    if (i > 1 && blocks[i - 2].parts == blocks[i - 1].parts)
      return fail("distinct_predecessor", "block " + std::to_string(i) + " equals its predecessor");
    for (std::size_t j = i + 1; j <= l; ++j) {
      if (!(dpart(2 * i) > dpart(2 * j - 1)))
        return fail("strict_drop", "d_" + std::to_string(2 * i) + " <= d_" + std::to_string(2 * j - 1));
      if (dpart(2 * j - 1) % 2 == 1 && !in_i.count(static_cast<int>(2 * j - 1)))
        return fail("odd_follower", std::to_string(2 * j - 1) + " is odd but not in I(P)");
    }
  }
  return {};
}

/// All Levi types whose Richardson orbit is d, gl parts non-increasing.
inline std::vector<LeviType> polarizations(const Partition& d, int search_cap = 24) {
  require_type_d(d);
  if (d.total() > search_cap)
    throw Error(ErrorCode::SearchCapExceeded,
                "2n = " + std::to_string(d.total()) + " exceeds the cap " + std::to_string(search_cap));
  std::vector<LeviType> out;
  const int total = d.total();
  for (int q = 0; q <= total; q += 2) {
    if (q == 2) continue;
    const int half = (total - q) / 2;
    if (half == 0) {
      if (q > 0 && richardson_orbit(LeviType({}, q)) == d) out.emplace_back(std::vector<int>{}, q);
      continue;
    }
    for_each_integer_partition(half, [&](const std::vector<int>& gl) {
      LeviType levi(gl, q);
      if (richardson_orbit(levi) == d) out.push_back(std::move(levi));
    });
  }
  return out;
}

/// Every Levi type of so_{total}.
inline std::vector<LeviType> all_levi_types(int total) {
  std::vector<LeviType> out;
  for (int q = 0; q <= total; q += 2) {
    if (q == 2) continue;
    const int half = (total - q) / 2;
    if (half == 0) {
      if (q > 0) out.emplace_back(std::vector<int>{}, q);
      continue;
    }
    for_each_integer_partition(half, [&](const std::vector<int>& gl) { out.emplace_back(gl, q); });
  }
  return out;
}

}  // namespace orbita
