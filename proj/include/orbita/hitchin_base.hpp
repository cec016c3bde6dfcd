#pragma once

// Square-root relations among characteristic coefficients, chained runs of
// D1* blocks, structure of the normalized base and the polarized cover ledger.
//
// Coordinates: c_0 = 1, c_2 .. c_{2n-2} characteristic coefficients, c_{2n} the
// Pfaffian whose square is the constant characteristic coefficient.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orbita/orbit_invariants.hpp"
#include "orbita/richardson.hpp"

namespace orbita {

struct CoefficientIndex {
  int m = 0;
  friend auto operator<=>(const CoefficientIndex&, const CoefficientIndex&) = default;
};

enum class RelationKind { Interior, Terminal };

constexpr std::string_view to_string(RelationKind k) noexcept {
  return k == RelationKind::Interior ? "interior" : "terminal";
}

/// One maximal run T_i = ... = T_{i+k} of equal D1* blocks and the polynomial
/// p_i(lambda) whose squareness it imposes.
struct RelationSpec {
  std::size_t run_start = 0;   // 1-based block index i
  int k = 0;
  int part_value = 0;          // the common even part of the run
  RelationKind kind = RelationKind::Interior;
  std::vector<CoefficientIndex> coeff_indices;   // leading first, degree 2k+2 down to 0

  std::size_t run_end() const noexcept { return run_start + static_cast<std::size_t>(k); }
  CoefficientIndex leading() const { return coeff_indices.front(); }
  CoefficientIndex constant() const { return coeff_indices.back(); }
  /// Degree of the square root polynomial, e = k + 1.
  int root_degree() const noexcept { return k + 1; }
};

inline std::vector<RelationSpec> square_relations(const Partition& d) {
  const auto blocks = decompose_blocks(d);
  const std::size_t l = blocks.size();
  std::vector<RelationSpec> out;
  std::size_t i = 0;
  while (i < l) {
    if (blocks[i].type != BlockType::D1Star) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end + 1 < l && blocks[end + 1].type == BlockType::D1Star && blocks[end + 1].parts == blocks[i].parts) ++end;
    RelationSpec rel;
    rel.run_start = i + 1;
    rel.k = static_cast<int>(end - i);
    rel.part_value = blocks[i].parts.front();
    rel.kind = end + 1 == l ? RelationKind::Terminal : RelationKind::Interior;
    const int base = static_cast<int>(std::accumulate(d.parts().begin(), d.parts().begin() + static_cast<long>(blocks[i].start), 0));
    for (int j = 0; j <= 2 * rel.k + 2; ++j) rel.coeff_indices.push_back({base + j * rel.part_value});
    if (rel.kind == RelationKind::Terminal && rel.constant().m != d.total())
      throw Error(ErrorCode::MalformedTypeD, "terminal relation does not end at the Pfaffian");
    out.push_back(std::move(rel));
    i = end + 1;
  }
  return out;
}

/// Consecutive runs on adjacent blocks share an endpoint variable.
struct ChainSignature {
  std::vector<int> e_vec;
  std::vector<std::size_t> relations;   // indices into the relation list
  bool anchored_c0 = false;             // starts at block 1, leading coefficient c_0 = 1
  bool anchored_pf = false;             // ends at block l, constant coefficient pf^2

  int length() const noexcept { return static_cast<int>(e_vec.size()); }
  bool anchored() const noexcept { return anchored_c0 || anchored_pf; }
  /// Number of free square-root coefficients after identifying shared endpoints.
  int veronese_dim() const {
    int dim = 0;
    for (int e : e_vec) dim += e + 1;
    return dim - (length() - 1) - (anchored_c0 ? 1 : 0);
  }
  /// Number of base coordinates c_m (m > 0) entering the chain's relations.
  int consumed_coordinates() const {
    int count = 0;
    for (int e : e_vec) count += 2 * e + 1;
    return count - (length() - 1) - (anchored_c0 ? 1 : 0);
  }
};

inline std::vector<ChainSignature> chain_signatures(const Partition& d, const std::vector<RelationSpec>& relations) {
  const std::size_t l = decompose_blocks(d).size();
  std::vector<ChainSignature> chains;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    const bool continues = !chains.empty() && relations[chains.back().relations.back()].run_end() + 1 == rel.run_start;
    if (!continues) {
      chains.emplace_back();
      chains.back().anchored_c0 = rel.run_start == 1;
    }
    auto& ch = chains.back();
    ch.e_vec.push_back(rel.root_degree());
    ch.relations.push_back(r);
    ch.anchored_pf = rel.run_end() == l;
  }
  return chains;
}

struct BaseStructureReport {
  std::vector<RelationSpec> relations;
  std::vector<ChainSignature> chains;
  int rank = 0;                 // n
  int dimension = 0;            // n - sum of (k_i + 1)
  int free_affine_dim = 0;      // coordinates untouched by any relation
  int components_H = 1;
  int components_A = 1;
  bool smooth_A = true;
  bool smooth_H = true;
  bool very_even = false;
};

inline BaseStructureReport base_structure(const Partition& d) {
  const auto blocks = decompose_blocks(d);
  BaseStructureReport out;
  out.relations = square_relations(d);
  out.chains = chain_signatures(d, out.relations);
  out.rank = d.rank();
  out.very_even = is_very_even(d);
  out.smooth_H = blocks.count(BlockType::D1Star) == 0;
  out.smooth_A = std::all_of(out.chains.begin(), out.chains.end(), [](const ChainSignature& c) { return c.anchored(); });
  const bool linked =
      std::any_of(out.chains.begin(), out.chains.end(), [](const ChainSignature& c) { return c.anchored_c0 && c.anchored_pf; });
  out.components_A = linked ? 2 : 1;
  int consumed = 0, reduction = 0;
  for (const auto& rel : out.relations) reduction += rel.root_degree();
  for (const auto& ch : out.chains) consumed += ch.consumed_coordinates();
  out.dimension = out.rank - reduction;
  out.free_affine_dim = out.rank - consumed;
  return out;
}

/// Union-find over coefficient indices with c_0 and c_{2n} identified as the
/// trivially square node.
class SquareClassGraph {
 public:
  explicit SquareClassGraph(int total) : total_(total), parent_(static_cast<std::size_t>(total / 2 + 1)) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t node(CoefficientIndex idx) const {
    if (idx.m <= 0 || idx.m >= total_) return 0;
    return static_cast<std::size_t>(idx.m / 2);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns true when the edge joins two components.
  bool join(CoefficientIndex a, CoefficientIndex b) {
    std::size_t ra = find(node(a)), rb = find(node(b));
    if (ra == rb) return false;
    parent_[std::max(ra, rb)] = std::min(ra, rb);
    return true;
  }

 private:
  int total_;
  std::vector<std::size_t> parent_;
};

struct DpLedger {
  Partition orbit;
  std::vector<int> i_set;
  std::vector<CoefficientIndex> bullets;        // with multiplicity, one per element of I(P)
  std::set<CoefficientIndex> adjoined_sqrts;
  std::vector<std::size_t> adjoined_runs;       // 1-based run start blocks
  int base_cycles = 0;
  int independent_bullets = 0;
  std::uint64_t components_aff = 1;
  std::uint64_t components_dP = 1;
  std::uint64_t degree_total = 1;
  std::uint64_t degree_per_component = 1;
  std::uint64_t springer = 1;
  bool matches_springer = true;
  bool matches_component_rule = true;
};

inline DpLedger dp_ledger(const LeviType& levi) {
  DpLedger out;
  out.orbit = richardson_orbit(levi);
  const Partition& d = out.orbit;
  out.i_set = i_set(levi);
  const auto relations = square_relations(d);
  const auto blocks = decompose_blocks(d);

  auto prefix = [&](std::size_t count) {
    int s = 0;
    for (std::size_t k = 0; k < count; ++k) s += d.part(k);
    return s;
  };
  for (int odd : out.i_set) {
    const auto j = static_cast<std::size_t>((odd + 1) / 2);
    out.bullets.push_back({j > 1 ? prefix(2 * j - 2) : prefix(2)});
  }
  out.adjoined_sqrts.insert(out.bullets.begin(), out.bullets.end());

  SquareClassGraph graph(d.total());
  for (const auto& rel : relations)
    if (!graph.join(rel.leading(), rel.constant())) ++out.base_cycles;
  for (const auto& b : out.bullets)
    if (graph.join(b, CoefficientIndex{0})) ++out.independent_bullets;

  // Propagation to a fixed point: a run is adjoined once either end is.
  std::set<int> rooted{0, d.total()};
  for (const auto& b : out.bullets) rooted.insert(b.m);
  std::vector<bool> taken(relations.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < relations.size(); ++r) {
      if (taken[r]) continue;
      if (rooted.count(relations[r].leading().m) || rooted.count(relations[r].constant().m)) {
        taken[r] = true;
        changed = true;
        rooted.insert(relations[r].leading().m);
        rooted.insert(relations[r].constant().m);
      }
    }
  }
  for (std::size_t r = 0; r < relations.size(); ++r)
    if (taken[r]) out.adjoined_runs.push_back(relations[r].run_start);

  const int s = static_cast<int>(out.bullets.size());
  out.components_aff = std::uint64_t{1} << out.base_cycles;
  out.components_dP = out.components_aff << (s - out.independent_bullets);
  out.degree_total = out.components_aff << s;
  out.degree_per_component = out.degree_total / out.components_dP;
  out.springer = springer_degree(levi).degree;
  out.matches_springer = out.degree_per_component == out.springer;
  const bool expect_two = blocks[0].type == BlockType::D1Star ||
                          std::find(out.i_set.begin(), out.i_set.end(), 1) != out.i_set.end();
  out.matches_component_rule = (out.components_dP == 2) == expect_two && out.components_dP <= 2;
  return out;
}

/// Ledger for a prescribed orbit; rejects Levi types that do not polarize it.
inline DpLedger dp_ledger(const LeviType& levi, const Partition& d) {
  if (richardson_orbit(levi) != d)
    throw Error(ErrorCode::NotRichardson, levi.str() + " does not polarize " + d.str());
  return dp_ledger(levi);
}

struct AmbientTerm {
  int index = 0;          // 2i, with 2n for the Pfaffian summand
  long degree = 0;
  long dimension = 0;     // exact when generic, otherwise a lower bound
  bool non_generic = false;
};

struct AmbientDims {
  std::vector<AmbientTerm> terms;
  long total = 0;
  bool any_non_generic = false;
};

inline AmbientDims ambient_dims(const Partition& d, int genus) {
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "genus must be non-negative");
  const auto eta = eta_sequence(d);
  const long g = genus;
  const long n = d.rank();
  AmbientDims out;
  auto add = [&](int index, long degree) {
    AmbientTerm t{index, degree, 0, false};
    if (degree >= 2 * g - 1) {
      t.dimension = degree - g + 1;
    } else {
      t.non_generic = true;
      t.dimension = std::max(degree - g + 1, 0L);
      out.any_non_generic = true;
    }
    out.total += t.dimension;
    out.terms.push_back(t);
  };
  for (long i = 1; i < n; ++i) add(static_cast<int>(2 * i), 2 * i * (2 * g - 2) + 2 * i - eta[static_cast<std::size_t>(i - 1)]);
  add(static_cast<int>(2 * n), n * (2 * g - 2) + n - eta.back() / 2);
  return out;
}

struct FiberReport {
  std::uint64_t components_before = 1;
  std::uint64_t components_after = 1;
  bool self_dual = true;
  std::uint64_t cover_degree = 1;
  bool very_even_split = false;
};

inline FiberReport fiber_report(const LeviType& levi) {
  const Partition d = richardson_orbit(levi);
  const auto deg = springer_degree(levi);
  FiberReport out;
  out.components_before = deg.degree;
  out.components_after = 1;
  out.self_dual = self_dual_generic_fiber(d);
  out.cover_degree = deg.degree;
  out.very_even_split = deg.very_even_split;
  return out;
}

inline FiberReport fiber_report(const LeviType& levi, const Partition& d) {
  if (richardson_orbit(levi) != d)
    throw Error(ErrorCode::NotRichardson, levi.str() + " does not polarize " + d.str());
  return fiber_report(levi);
}

}  // namespace orbita
