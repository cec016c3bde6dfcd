#pragma once

// Exhaustive cross-module checks over every partition and Levi type up to a size.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbita/hitchin_base.hpp"
#include "orbita/orbit_invariants.hpp"
#include "orbita/parallel.hpp"
#include "orbita/partition.hpp"
#include "orbita/richardson.hpp"

namespace orbita {

inline const std::vector<std::string>& sweep_families() {
  static const std::vector<std::string> names{"collapse", "special", "invariants", "base", "richardson", "ledger"};
  return names;
}

struct SweepRecord {
  std::string family;
  int total = 0;        // 2n
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const noexcept { return failures == 0; }
};

/// Largest type-D partition dominated by p, found by comparison against
/// every type-D partition of the same size.
inline std::optional<Partition> dominance_maximum(const Partition& p, const std::vector<Partition>& type_d) {
  std::vector<const Partition*> below;
  for (const auto& q : type_d)
    if (dominates(p, q)) below.push_back(&q);
  for (const auto* cand : below)
    if (std::all_of(below.begin(), below.end(), [&](const Partition* q) { return dominates(*cand, *q); })) return *cand;
  return std::nullopt;
}

namespace detail {

/// Collects per-case failure messages in index order.
template <typename Check>
SweepRecord run_family(std::string family, int total, std::size_t count, unsigned jobs, Check&& check) {
  std::vector<std::string> failures(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      failures[i] = check(i);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
    }
  });
  SweepRecord rec{std::move(family), total, static_cast<int>(count), 0, {}};
  for (const auto& f : failures)
    if (!f.empty()) {
      if (rec.failures++ == 0) rec.first_failure = f;
    }
  return rec;
}

inline bool scan_interior_d1star(const BlockDecomposition& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].type != BlockType::D1Star) continue;
    bool before = false, after = false;
    for (std::size_t j = 0; j < i; ++j) before = before || blocks[j].type != BlockType::D1Star;
    for (std::size_t j = i + 1; j < blocks.size(); ++j) after = after || blocks[j].type != BlockType::D1Star;
    if (before && after) return true;
  }
  return false;
}

}  // namespace detail

/// Collapse oracle comparison is skipped above `oracle_cap` (quadratic cost).
inline std::vector<SweepRecord> run_sweep(int max_total, const std::set<std::string>& families, unsigned jobs,
                                          int oracle_cap = 20) {
  std::vector<SweepRecord> out;
  auto wanted = [&](const std::string& f) { return families.count("all") || families.count(f); };
  for (int total = 2; total <= max_total; total += 2) {
    const auto everything = wanted("collapse") ? all_partitions(total) : std::vector<Partition>{};
    const auto type_d = type_d_partitions(total);

    if (wanted("collapse")) {
      out.push_back(detail::run_family("collapse", total, everything.size(), jobs, [&](std::size_t i) -> std::string {
        const Partition& p = everything[i];
        const Partition c = d_collapse(p);
        if (!is_type_d(c)) return p.str() + " collapses outside type D";
        if (!dominates(p, c)) return p.str() + " is not above its collapse";
        if (d_collapse(c) != c) return p.str() + " collapse is not idempotent";
        if (c.total() != p.total()) return p.str() + " collapse changes the total";
        if (total <= oracle_cap) {
          const auto best = dominance_maximum(p, type_d);
          if (!best || *best != c) return p.str() + " collapse " + c.str() + " differs from the dominance maximum";
        }
        return {};
      }));
    }
    if (wanted("special")) {
      out.push_back(detail::run_family("special", total, type_d.size(), jobs, [&](std::size_t i) -> std::string {
        const Partition& d = type_d[i];
        const auto blocks = decompose_blocks(d);
        const bool by_transpose = is_special(d);
        bool by_blocks = true, by_length = true;
        for (const auto& b : blocks.blocks())
          if (b.type == BlockType::D2) {
            by_blocks = by_blocks && b.k() == 0;
            by_length = by_length && b.size() == 2;
          }
        if (by_transpose != by_blocks || by_blocks != by_length || self_dual_generic_fiber(d) != by_length)
          return d.str() + " speciality tests disagree";
        if (transpose(transpose(d)) != d) return d.str() + " transpose is not involutive";
        if (blocks.concatenated() != d.parts()) return d.str() + " blocks do not reconcatenate";
        if (by_transpose && std::all_of(blocks.blocks().begin(), blocks.blocks().end(), [](const Block& b) { return b.size() == 2; }) &&
            d.size() != 2 * blocks.size())
          return d.str() + " part count is not twice the block count";
        return {};
      }));
    }
    if (wanted("invariants")) {
      out.push_back(detail::run_family("invariants", total, type_d.size(), jobs, [&](std::size_t i) -> std::string {
        const Partition& d = type_d[i];
        const auto deg = deg_partition(d);
        if (deg.total() != total || deg.block_ordered.size() != d.size()) return d.str() + " degree partition size";
        const auto kl = kl_pair(d);
        if (kl.weight() != total) return d.str() + " |alpha| + 2|beta| != 2n";
        const auto eta = eta_sequence(d);
        if (!std::is_sorted(eta.begin(), eta.end())) return d.str() + " eta decreases";
        if (eta.back() != static_cast<int>(d.size()) || eta.back() % 2 != 0) return d.str() + " eta does not end at an even r";
        const auto blocks = decompose_blocks(d);
        const auto cov = cover_invariants(d);
        int expected_beta_tilde = 0;
        for (const auto& b : blocks.blocks()) {
          if (b.type == BlockType::D1Star) expected_beta_tilde += 2;
          if (b.type == BlockType::D2) expected_beta_tilde += static_cast<int>(b.size());
        }
        if (cov.beta_tilde != expected_beta_tilde) return d.str() + " beta_tilde block count";
        if (cov.beta < cov.c) return d.str() + " negative cover exponent";
        return {};
      }));
    }
    if (wanted("base")) {
      out.push_back(detail::run_family("base", total, type_d.size(), jobs, [&](std::size_t i) -> std::string {
        const Partition& d = type_d[i];
        const auto blocks = decompose_blocks(d);
        const auto rep = base_structure(d);
        if ((rep.components_A == 2) != is_very_even(d)) return d.str() + " components vs very even";
        if (rep.smooth_H != (blocks.count(BlockType::D1Star) == 0)) return d.str() + " smooth_H scan";
        if (rep.smooth_A == detail::scan_interior_d1star(blocks)) return d.str() + " smooth_A scan";
        for (const auto& rel : rep.relations) {
          for (std::size_t k = 0; k < rel.coeff_indices.size(); ++k) {
            const int m = rel.coeff_indices[k].m;
            if (m % 2 != 0 || m < 0 || m > total) return d.str() + " relation index out of range";
            if (m == 0 && k != 0) return d.str() + " c_0 away from the leading slot";
            if (m == total && !(rel.kind == RelationKind::Terminal && k + 1 == rel.coeff_indices.size()))
              return d.str() + " Pfaffian away from a terminal constant";
          }
          const std::size_t slots = static_cast<std::size_t>(2 * rel.k + 3);
          if (rel.coeff_indices.size() != slots) return d.str() + " relation slot count";
        }
        int sum_e = 0, diff = 0;
        for (const auto& ch : rep.chains) {
          for (int e : ch.e_vec) sum_e += e;
          diff += ch.consumed_coordinates() - ch.veronese_dim();
        }
        if (diff != sum_e) return d.str() + " chain dimension bookkeeping";
        if (rep.free_affine_dim < 0 || rep.dimension < 0) return d.str() + " negative dimension";
        return {};
      }));
    }
    if (wanted("richardson") || wanted("ledger")) {
      const auto levis = all_levi_types(total);
      if (wanted("richardson")) {
        out.push_back(detail::run_family("richardson", total, levis.size(), jobs, [&](std::size_t i) -> std::string {
          const LeviType& levi = levis[i];
          const Partition dp = induce(levi);
          if (dp.total() != total) return levi.str() + " induced total";
          const Partition orbit = richardson_orbit(levi);
          if (!is_type_d(orbit) || !is_special(orbit)) return levi.str() + " Richardson orbit " + orbit.str() + " is not special";
          for (int j : i_set(levi)) {
            const int v = dp.part(static_cast<std::size_t>(j - 1));
            if (j % 2 != 1 || v % 2 != 0 || v < dp.part(static_cast<std::size_t>(j)) + 2) return levi.str() + " I(P) condition";
          }
          const auto check = validate_polarizable(levi, orbit);
          if (!check.ok) return levi.str() + " polarization clause " + check.clause + ": " + check.detail;
          const auto pols = polarizations(orbit, std::max(24, total));
          if (std::find(pols.begin(), pols.end(), levi) == pols.end()) return levi.str() + " missing from the polarization search";
          return {};
        }));
      }
      if (wanted("ledger")) {
        out.push_back(detail::run_family("ledger", total, levis.size(), jobs, [&](std::size_t i) -> std::string {
          const LeviType& levi = levis[i];
          const auto ledger = dp_ledger(levi);
          if (!ledger.matches_springer)
            return levi.str() + " per-component degree " + std::to_string(ledger.degree_per_component) + " vs Springer " +
                   std::to_string(ledger.springer);
          if (!ledger.matches_component_rule) return levi.str() + " component count rule";
          const auto fiber = fiber_report(levi);
          if (fiber.components_before != ledger.springer || !fiber.self_dual) return levi.str() + " fiber report";
          return {};
        }));
      }
    }
  }
  return out;
}

}  // namespace orbita
