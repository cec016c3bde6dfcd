#pragma once

// Seeded randomized verification suites. Trial i draws from
// Rng::split(seed, i), so results do not depend on the worker count.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbita/local_model.hpp"
#include "orbita/parallel.hpp"
#include "orbita/series.hpp"
#include "orbita/veronese.hpp"

namespace orbita {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int trunc = 8;
  unsigned jobs = 1;
};

struct SeriesSuiteResult {
  int leading_trials = 0;
  int leading_pass = 0;
  int leading_comparisons = 0;
  int leading_resamples = 0;
  std::string first_leading_failure;
  int example_trials = 0;
  int example_pass = 0;
  int example_resamples = 0;
  ExampleSuiteResult sample;
  ExampleSuiteResult unit_sample;
  int ring_checks = 0;
  int ring_pass = 0;
  int sqrt_checks = 0;
  int sqrt_pass = 0;
  int newton_checks = 0;
  int newton_pass = 0;
};

namespace detail {

inline TruncSeries random_series(Rng& rng, int order, int min_valuation = 0) {
  TruncSeries s(order);
  for (int i = min_valuation; i < order; ++i) s[i] = rng.small_rational();
  return s;
}

/// Non-increasing degrees with total at most `max_total` and at most `max_factors` parts.
inline std::vector<int> random_degrees(Rng& rng, int max_total, int max_factors) {
  std::vector<int> degrees;
  int total = 0;
  const int count = static_cast<int>(rng.uniform_int(1, max_factors));
  for (int k = 0; k < count && total < max_total; ++k) {
    const int e = static_cast<int>(rng.uniform_int(1, std::min(4, max_total - total)));
    degrees.push_back(e);
    total += e;
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace detail

inline SeriesSuiteResult run_series_suite(const SuiteOptions& opt) {
  SeriesSuiteResult out;
  const int trials = opt.trials;

  // leading-coefficient product identity
  std::vector<int> lead_ok(static_cast<std::size_t>(trials), 0), lead_count(static_cast<std::size_t>(trials), 0);
  std::vector<std::string> lead_fail(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), opt.jobs, [&](std::size_t i) {
    Rng rng = Rng::split(opt.seed, i);
    const int order = std::max(opt.trunc, 2);
    const auto degrees = detail::random_degrees(rng, 12, std::min(6, order - 1));
    std::vector<PolyOverSeries> factors;
    for (int e : degrees) factors.push_back(random_eisenstein(e, order, false, rng));
    const auto cmp = leading_coeff_check(factors);
    lead_count[i] = static_cast<int>(cmp.size());
    lead_ok[i] = std::all_of(cmp.begin(), cmp.end(), [](const LeadingComparison& c) { return c.pass; });
    for (const auto& c : cmp)
      if (!c.pass) {
        lead_fail[i] = "trial " + std::to_string(i) + " i=" + std::to_string(c.i) + ": " + c.lhs.get_str() + " vs " + c.rhs.get_str();
        break;
      }
  });
  out.leading_trials = trials;
  for (std::size_t i = 0; i < lead_ok.size(); ++i) {
    out.leading_pass += lead_ok[i];
    out.leading_comparisons += lead_count[i];
    if (out.first_leading_failure.empty()) out.first_leading_failure = lead_fail[i];
  }

  // worked-example coefficient table
  std::vector<ExampleSuiteResult> runs(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), opt.jobs, [&](std::size_t i) {
    Rng rng = Rng::split(opt.seed ^ 0x5eedULL, i);
    runs[i] = example_4433_22_suite(opt.trunc, rng);
  });
  out.example_trials = trials;
  for (const auto& r : runs) {
    out.example_pass += r.pass ? 1 : 0;
    out.example_resamples += r.resamples;
  }
  if (!runs.empty()) out.sample = runs.front();
  {
    Rng rng = Rng::split(opt.seed ^ 0x1111ULL, 0);
    out.unit_sample = example_4433_22_suite(opt.trunc, rng, true);
  }

  // ring axioms, square roots and Newton polygon merging
  Rng rng = Rng::split(opt.seed ^ 0xa11ULL, 0);
  for (int k = 0; k < 20; ++k) {
    const int order = static_cast<int>(rng.uniform_int(1, 16));
    const auto a = detail::random_series(rng, order), b = detail::random_series(rng, order),
               c = detail::random_series(rng, order);
    ++out.ring_checks;
    if ((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a) ++out.ring_pass;
  }
  for (int k = 0; k < 20; ++k) {
    const int order = static_cast<int>(rng.uniform_int(2, 16));
    auto root = detail::random_series(rng, order, static_cast<int>(rng.uniform_int(0, 2)));
    if (root.is_zero()) root[order - 1] = 1;
    const auto sq = root * root;
    ++out.sqrt_checks;
    try {
      const auto r = series_sqrt(sq);
      if (r * r == sq.truncated(r.order())) ++out.sqrt_pass;
    } catch (const Error&) {
      // the square vanished to the truncation order; nothing to compare
      ++out.sqrt_pass;
    }
  }
  for (int k = 0; k < 20; ++k) {
    const int order = 16;
    const auto f = random_eisenstein(static_cast<int>(rng.uniform_int(1, 4)), order, false, rng);
    const auto g = random_eisenstein(static_cast<int>(rng.uniform_int(1, 4)), order, false, rng);
    ++out.newton_checks;
    const auto pf = newton_polygon(f), pg = newton_polygon(g), pfg = newton_polygon(f * g);
    std::vector<NewtonSegment> merged = pf.segments;
    for (const auto& s : pg.segments) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const NewtonSegment& m) { return m.slope == s.slope; });
      if (it == merged.end()) merged.push_back(s);
      else it->length += s.length;
    }
    std::sort(merged.begin(), merged.end(), [](const NewtonSegment& a, const NewtonSegment& b) { return a.slope < b.slope; });
    if (merged == pfg.segments) ++out.newton_pass;
  }
  return out;
}

struct VeroneseSuiteResult {
  std::vector<int> degrees;
  int fiber_trials = 0;
  int fiber_pass = 0;
  int sign_pass = 0;
  int chain_trials = 0;
  int chain_products = 0;
  int chain_pass = 0;
  int chain_consistency_pass = 0;
};

inline VeroneseSuiteResult run_veronese_suite(const SuiteOptions& opt, const std::vector<int>& degrees) {
  VeroneseSuiteResult out;
  out.degrees = degrees;
  const std::size_t trials = static_cast<std::size_t>(opt.trials);
  for (std::size_t di = 0; di < degrees.size(); ++di) {
    const int e = degrees[di];
    std::vector<int> ok(trials, 0), sign(trials, 0);
    parallel_for(trials, opt.jobs, [&](std::size_t i) {
      Rng rng = Rng::split(opt.seed + static_cast<std::uint64_t>(e) * 1000003ULL, i);
      YVector y(static_cast<std::size_t>(e) + 1);
      y[0] = rng.small_rational(true);
      for (std::size_t k = 1; k < y.size(); ++k) y[k] = rng.small_rational();
      YVector neg = y;
      for (auto& v : neg) v = -v;
      const auto c = phi_eval(y);
      const auto fiber = recover_fiber(c);
      ok[i] = fiber.size() == 2 && ((fiber[0] == y && fiber[1] == neg) || (fiber[0] == neg && fiber[1] == y));
      sign[i] = phi_eval(neg) == c;
    });
    out.fiber_trials += static_cast<int>(trials);
    for (std::size_t i = 0; i < trials; ++i) {
      out.fiber_pass += ok[i];
      out.sign_pass += sign[i];
    }
  }
  std::vector<int> products(trials, 0), pass(trials, 0), consistent(trials, 0);
  parallel_for(trials, opt.jobs, [&](std::size_t i) {
    Rng rng = Rng::split(opt.seed ^ 0xc4a1ULL, i);
    ChainPoint p;
    const int length = static_cast<int>(rng.uniform_int(1, 4));
    Rational endpoint = rng.small_rational(true);
    for (int b = 0; b < length; ++b) {
      YVector y(static_cast<std::size_t>(rng.uniform_int(2, 4)));
      y.front() = endpoint;
      for (std::size_t k = 1; k + 1 < y.size(); ++k) y[k] = rng.small_rational();
      y.back() = rng.small_rational(true);
      endpoint = y.back();
      p.blocks.push_back(std::move(y));
    }
    const auto image = chained_phi_eval(p);
    bool chain_ok = true;
    for (const auto& [a, b] : image.shared) chain_ok = chain_ok && image.blocks[a].back() == image.blocks[b].front();
    consistent[i] = chain_ok;
    for (std::size_t a = 0; a < p.blocks.size(); ++a)
      for (std::size_t j = 0; j < p.blocks[a].size(); ++j)
        for (std::size_t b = a; b < p.blocks.size(); ++b)
          for (std::size_t m = 0; m < p.blocks[b].size(); ++m) {
            ++products[i];
            pass[i] += cross_product_recovery(p, {a, j}, {b, m}).pass ? 1 : 0;
          }
  });
  out.chain_trials = static_cast<int>(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    out.chain_products += products[i];
    out.chain_pass += pass[i];
    out.chain_consistency_pass += consistent[i];
  }
  return out;
}

struct LocalSuiteEntry {
  Partition partition;
  DegPartitionCheck check;
};

struct KernelDiagnostic {
  std::size_t kernel_rank = 0;
  std::size_t reduction_rank = 0;
  std::vector<int> pivot_valuations;
  bool annihilated = false;
};

/// Saturated kernel of f_2(C) for f = f_1 f_2, f_1 = l^2 + t l + 2t,
/// f_2 = l^2 - t l + 2t, C the companion matrix of f.
inline KernelDiagnostic companion_kernel_diagnostic(int order) {
  auto poly = [&](std::vector<std::pair<int, int>> t_coeffs_by_power) {
    std::vector<TruncSeries> c;
    for (auto [constant, t1] : t_coeffs_by_power) {
      TruncSeries s = TruncSeries::constant(constant, order);
      if (order > 1) s[1] = t1;
      c.push_back(s);
    }
    return PolyOverSeries(std::move(c));
  };
  const auto f1 = poly({{0, 2}, {0, 1}, {1, 0}});
  const auto f2 = poly({{0, 2}, {0, -1}, {1, 0}});
  const auto kernel = saturated_kernel(evaluate_at(f2, companion(f1 * f2)));
  KernelDiagnostic out;
  out.kernel_rank = kernel.basis.size();
  out.reduction_rank = rank(kernel.reduction);
  out.pivot_valuations = kernel.pivot_valuations;
  out.annihilated = kernel.annihilated;
  return out;
}

inline std::vector<Partition> default_local_partitions() {
  return {Partition{3, 1}, Partition{2, 2}, Partition{3, 3}, Partition{5, 1}, Partition{3, 1, 1, 1}, Partition{2, 2, 1, 1}};
}

inline std::vector<LocalSuiteEntry> run_local_suite(const SuiteOptions& opt, const std::vector<Partition>& partitions) {
  std::vector<LocalSuiteEntry> out(partitions.size());
  for (const auto& d : partitions) {
    require_type_d(d);
    if (d.total() > kMaxLocalModelSize)
      throw Error(ErrorCode::TooLarge, "2n = " + std::to_string(d.total()) + " exceeds " + std::to_string(kMaxLocalModelSize));
  }
  parallel_for(partitions.size(), opt.jobs, [&](std::size_t i) {
    Rng rng = Rng::split(opt.seed, i);
    out[i] = {partitions[i], check_deg_partition(partitions[i], opt.trials, opt.trunc, rng)};
  });
  return out;
}

}  // namespace orbita
