#pragma once

// Deliberately naive reference implementations. None of these call into the
// library; they work on plain integer vectors so a shared bug cannot hide.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Every partition of m, generated by the "next partition" successor rule
/// starting from [m] and ending at [1,...,1].
inline std::vector<Parts> partitions_of(int m) {
  std::vector<Parts> out;
  Parts p{m};
  for (;;) {
    out.push_back(p);
    // strip trailing ones
    int ones = 0;
    while (!p.empty() && p.back() == 1) {
      p.pop_back();
      ++ones;
    }
    if (p.empty()) break;
    const int k = p.back() - 1;
    p.back() = k;
    int rest = ones + 1;
    while (rest > k) {
      p.push_back(k);
      rest -= k;
    }
    if (rest > 0) p.push_back(rest);
  }
  return out;
}

/// Column lengths of the Young diagram, read cell by cell.
inline Parts transpose(const Parts& p) {
  Parts cols;
  for (std::size_t row = 0; row < p.size(); ++row)
    for (int col = 0; col < p[row]; ++col) {
      if (static_cast<std::size_t>(col) >= cols.size()) cols.push_back(0);
      ++cols[static_cast<std::size_t>(col)];
    }
  return cols;
}

/// eps = +1: every even part has even multiplicity; eps = -1: every odd part.
inline bool in_p_eps(const Parts& p, int eps) {
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  const int parity = eps == 1 ? 0 : 1;
  for (auto [value, count] : mult)
    if (value % 2 == parity && count % 2 == 1) return false;
  return true;
}

inline bool dominates(const Parts& a, const Parts& b) {
  long sa = 0, sb = 0;
  for (std::size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
    sa += j < a.size() ? a[j] : 0;
    sb += j < b.size() ? b[j] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

/// Largest member of P_{+1} below p, by pairwise comparison. Empty if the
/// candidates have no unique maximum.
inline std::optional<Parts> dominance_maximum(const Parts& p) {
  int total = 0;
  for (int x : p) total += x;
  std::vector<Parts> below;
  for (const auto& q : partitions_of(total))
    if (in_p_eps(q, 1) && dominates(p, q)) below.push_back(q);
  std::vector<Parts> maximal;
  for (const auto& a : below) {
    bool ok = true;
    for (const auto& b : below) ok = ok && dominates(a, b);
    if (ok) maximal.push_back(a);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal.front();
}

inline bool special(const Parts& d) { return in_p_eps(transpose(d), -1); }

inline bool very_even(const Parts& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

// Blocks are encoded as a type letter and the parts they cover:
// 'A' = D1 (odd pair), 'S' = D1* (even pair), 'B' = D2.
struct Seg {
  char type;
  Parts parts;
};

inline bool well_formed(const Seg& s) {
  const auto& v = s.parts;
  if (s.type == 'A') return v.size() == 2 && v[0] == v[1] && v[0] % 2 == 1;
  if (s.type == 'S') return v.size() == 2 && v[0] == v[1] && v[0] % 2 == 0;
  if (v.size() < 2 || v.size() % 2 != 0) return false;
  if (v.front() % 2 == 0 || v.back() % 2 == 0) return false;
  if (v.front() == v[1] || v[v.size() - 2] == v.back()) return false;
  for (std::size_t j = 1; j + 1 < v.size(); j += 2)
    if (v[j] % 2 != 0 || v[j] != v[j + 1]) return false;
  return true;
}

/// All segmentations of d into well-formed blocks, by exhaustive search over
/// cut points and types.
inline std::vector<std::vector<Seg>> segmentations(const Parts& d) {
  std::vector<std::vector<Seg>> out;
  std::vector<Seg> current;
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (pos == d.size()) {
      out.push_back(current);
      return;
    }
    for (std::size_t end = pos + 2; end <= d.size(); end += 2) {
      Parts piece(d.begin() + static_cast<long>(pos), d.begin() + static_cast<long>(end));
      for (char type : {'A', 'S', 'B'}) {
        Seg s{type, piece};
        if (!well_formed(s)) continue;
        current.push_back(s);
        go(end);
        current.pop_back();
      }
    }
  };
  go(0);
  return out;
}

inline std::string type_string(const std::vector<Seg>& segs) {
  std::string s;
  for (const auto& b : segs) s += b.type;
  return s;
}

/// D2 criterion: special iff every D2 block has exactly two parts.
inline bool special_by_blocks(const Parts& d) {
  const auto segs = segmentations(d);
  if (segs.size() != 1) return false;
  for (const auto& b : segs.front())
    if (b.type == 'B' && b.parts.size() != 2) return false;
  return true;
}

/// smooth_A fails exactly when some D1* block has a non-D1* block on both sides.
inline bool has_interior_d1star(const std::string& types) {
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i] != 'S') continue;
    const bool left = types.substr(0, i).find_first_not_of('S') != std::string::npos;
    const bool right = types.substr(i + 1).find_first_not_of('S') != std::string::npos;
    if (left && right) return true;
  }
  return false;
}

/// eta_{2i} for i = 1..n, by scanning prefix sums afresh for each i.
inline std::vector<int> eta(const Parts& d) {
  int total = 0;
  for (int x : d) total += x;
  std::vector<int> out;
  for (int target = 2; target <= total; target += 2) {
    int prefix = 0;
    for (std::size_t j = 0; j < d.size(); ++j) {
      prefix += d[j];
      if (prefix >= target) {
        out.push_back(static_cast<int>(j) + 1);
        break;
      }
    }
  }
  return out;
}

/// Column-count form of induction from gl(p) + so(q): the column of height
/// 2 * #{p_i >= j} + [j <= q] is built cell by cell, then transposed back.
inline Parts induce(const Parts& gl, int q) {
  const int width = std::max(gl.empty() ? 0 : *std::max_element(gl.begin(), gl.end()), q);
  Parts dp;
  for (int j = 1; j <= width; ++j) {
    int v = 0;
    for (int p : gl)
      if (p >= j) v += 2;
    if (j <= q) v += 1;
    if (v > 0) dp.push_back(v);
  }
  std::sort(dp.begin(), dp.end(), std::greater<>());
  return dp;
}

/// Springer degree from the induced partition directly.
inline std::uint64_t springer(const Parts& gl, int q) {
  const Parts dp = induce(gl, q);
  auto at = [&](int j) { return j >= 1 && static_cast<std::size_t>(j) <= dp.size() ? dp[static_cast<std::size_t>(j - 1)] : 0; };
  int count = 0;
  for (int j = 1; j <= static_cast<int>(dp.size()); j += 2)
    if (at(j) % 2 == 0 && at(j) >= at(j + 1) + 2) ++count;
  if (q >= 4) return std::uint64_t{1} << count;
  return count == 0 ? 1 : std::uint64_t{1} << (count - 1);
}

}  // namespace oracle
