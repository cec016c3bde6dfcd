// orbita: command-line front end for the type-D orbit calculator.

#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

using namespace orbita;
using orbita::cli::Json;
using orbita::cli::Report;
using orbita::cli::to_json;

namespace {

struct Options {
  std::string format = "json";
  int jobs = 0;
  std::string partition;
  std::string gl;
  std::optional<int> q;
  std::string levi;
  std::optional<int> genus;
  std::optional<int> trunc;
  std::optional<int> trials;
  std::uint64_t seed = 1;
  std::optional<int> e;
  std::string suite;
  int max_total = 14;
  std::vector<std::string> checks{"all"};
  int search_cap = 24;
  int oracle_cap = 20;
};

Partition require_partition(const Options& opt) {
  if (opt.partition.empty()) throw Error(ErrorCode::InvalidArgument, "--partition is required");
  return parse_partition(opt.partition);
}

LeviType require_levi(const Options& opt) {
  if (!opt.levi.empty()) return parse_levi(opt.levi);
  if (!opt.q) throw Error(ErrorCode::InvalidArgument, "give --levi or --q (with optional --gl)");
  return LeviType(opt.gl.empty() ? std::vector<int>{} : parse_int_list(opt.gl), *opt.q);
}

void cmd_classify(const Options& opt, Report& rep) {
  const Partition d = require_partition(opt);
  require_type_d(d);
  const auto blocks = decompose_blocks(d);
  const auto deg = deg_partition(d);
  const auto kl = kl_pair(d);
  const auto cov = cover_invariants(d);
  const auto eta = eta_sequence(d);
  bool by_blocks = true;
  for (const auto& b : blocks.blocks())
    if (b.type == BlockType::D2 && b.k() > 0) by_blocks = false;
  auto& r = rep.results();
  r["partition"] = to_json(d);
  r["total"] = d.total();
  r["blocks"] = to_json(blocks);
  r["special"] = is_special(d);
  r["very_even"] = is_very_even(d);
  r["deg"] = deg.sorted();
  r["deg_blocks"] = deg.block_ordered;
  r["kl_alpha"] = kl.alpha;
  r["kl_beta"] = kl.beta;
  r["beta_tilde"] = cov.beta_tilde;
  r["beta"] = cov.beta;
  r["c"] = cov.c;
  r["local_cover_degree"] = cov.local_cover_degree;
  r["ramification"] = ramification_count(d);
  r["eta"] = eta;
  r["self_dual"] = self_dual_generic_fiber(d);
  rep.check("speciality_agreement", is_special(d) == by_blocks, "transpose test vs D2 block criterion");
  rep.check("blocks_reconcatenate", blocks.concatenated() == d.parts());
  rep.check("kl_weight", kl.weight() == d.total(), "|alpha| + 2|beta| = " + std::to_string(kl.weight()));
  rep.check("eta_terminal_even", eta.back() == static_cast<int>(d.size()) && eta.back() % 2 == 0);
}

void cmd_collapse(const Options& opt, Report& rep) {
  const Partition p = require_partition(opt);
  const Partition c = d_collapse(p);
  auto& r = rep.results();
  r["partition"] = to_json(p);
  r["collapsed"] = to_json(c);
  r["input_type_d"] = is_type_d(p);
  rep.check("collapse_type_d", is_type_d(c));
  rep.check("collapse_dominated", dominates(p, c));
  rep.check("collapse_idempotent", d_collapse(c) == c);
  if (p.total() <= opt.oracle_cap) {
    const auto best = dominance_maximum(p, type_d_partitions(p.total()));
    rep.check("dominance_maximum", best && *best == c, best ? "maximum " + best->str() : "no maximum");
  }
}

void cmd_induce(const Options& opt, Report& rep) {
  const LeviType levi = require_levi(opt);
  const Partition dp = induce(levi);
  const Partition orbit = richardson_orbit(levi);
  const auto iset = i_set(levi);
  const auto deg = springer_degree(levi);
  auto& r = rep.results();
  r["levi"] = to_json(levi);
  r["d_P"] = to_json(dp);
  r["orbit"] = to_json(orbit);
  r["i_set"] = iset;
  r["springer_degree"] = deg.degree;
  r["very_even_split"] = deg.very_even_split;
  r["parabolics"] = levi.q() == 0 ? 2 : 1;
  r["special"] = is_special(orbit);
  bool iset_ok = true;
  for (int j : iset) {
    const int v = dp.part(static_cast<std::size_t>(j - 1));
    iset_ok = iset_ok && j % 2 == 1 && v % 2 == 0 && v >= dp.part(static_cast<std::size_t>(j)) + 2;
  }
  const auto pol = validate_polarizable(levi, orbit);
  rep.check("orbit_special", is_special(orbit));
  rep.check("i_set_conditions", iset_ok);
  rep.check("polarizable_structure", pol.ok, pol.ok ? "" : pol.clause + ": " + pol.detail);
}

void cmd_polarize(const Options& opt, Report& rep) {
  const Partition d = require_partition(opt);
  const auto pols = polarizations(d, opt.search_cap);
  Json list = Json::array();
  bool round_trip = true;
  for (const auto& levi : pols) {
    Json j = to_json(levi);
    j["parabolics"] = levi.q() == 0 ? 2 : 1;
    j["i_set"] = i_set(levi);
    j["springer_degree"] = springer_degree(levi).degree;
    list.push_back(j);
    round_trip = round_trip && richardson_orbit(levi) == d && validate_polarizable(levi, d).ok;
  }
  auto& r = rep.results();
  r["partition"] = to_json(d);
  r["richardson"] = !pols.empty();
  r["polarizations"] = list;
  rep.check("polarizations_round_trip", round_trip);
  if (!pols.empty()) rep.check("richardson_special", is_special(d));
}

void cmd_base_report(const Options& opt, Report& rep) {
  const Partition d = require_partition(opt);
  const auto st = base_structure(d);
  const auto blocks = decompose_blocks(d);
  auto& r = rep.results();
  r["partition"] = to_json(d);
  Json rels = Json::array(), chains = Json::array();
  for (const auto& rel : st.relations) rels.push_back(to_json(rel));
  for (const auto& ch : st.chains) chains.push_back(to_json(ch));
  r["relations"] = rels;
  r["chains"] = chains;
  r["rank"] = st.rank;
  r["dimension"] = st.dimension;
  r["free_affine_dim"] = st.free_affine_dim;
  r["components_H"] = st.components_H;
  r["components_A"] = st.components_A;
  r["smooth_A"] = st.smooth_A;
  r["smooth_H"] = st.smooth_H;
  r["very_even"] = st.very_even;
  rep.check("components_vs_very_even", (st.components_A == 2) == st.very_even);
  rep.check("smooth_H_scan", st.smooth_H == (blocks.count(BlockType::D1Star) == 0));
  bool interior = false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].type != BlockType::D1Star) continue;
    bool before = false, after = false;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (blocks[j].type == BlockType::D1Star) continue;
      if (j < i) before = true;
      if (j > i) after = true;
    }
    interior = interior || (before && after);
  }
  rep.check("smooth_A_scan", st.smooth_A == !interior);

  if (opt.genus) {
    const auto amb = ambient_dims(d, *opt.genus);
    Json terms = Json::array();
    for (const auto& t : amb.terms)
      terms.push_back(Json{{"index", t.index}, {"degree", t.degree}, {"dimension", t.dimension}, {"non_generic", t.non_generic}});
    r["ambient"] = Json{{"genus", *opt.genus}, {"terms", terms}, {"total", amb.total}, {"non_generic", amb.any_non_generic}};
  }
  if (!opt.levi.empty() || opt.q) {
    const LeviType levi = require_levi(opt);
    const auto ledger = dp_ledger(levi, d);
    const auto fiber = fiber_report(levi, d);
    Json sqrts = Json::array(), runs = Json::array(), names = Json::array();
    for (const auto& c : ledger.adjoined_sqrts) {
      sqrts.push_back(c.m);
      names.push_back("sqrt c_" + std::to_string(c.m));
    }
    for (auto run : ledger.adjoined_runs) {
      runs.push_back(run);
      names.push_back("sqrt p_" + std::to_string(run));
    }
    r["levi"] = to_json(levi);
    r["ledger"] = Json{{"i_set", ledger.i_set},
                       {"adjoined", names},
                       {"adjoined_sqrts", sqrts},
                       {"adjoined_runs", runs},
                       {"components_dP", ledger.components_dP},
                       {"degree_total", ledger.degree_total},
                       {"degree_per_component", ledger.degree_per_component},
                       {"springer_degree", ledger.springer}};
    r["fiber"] = Json{{"components_before", fiber.components_before},
                      {"components_after", fiber.components_after},
                      {"self_dual", fiber.self_dual},
                      {"cover_degree", fiber.cover_degree},
                      {"very_even_split", fiber.very_even_split}};
    rep.check("ledger_degree_vs_springer", ledger.matches_springer,
              std::to_string(ledger.degree_per_component) + " vs " + std::to_string(ledger.springer));
    rep.check("ledger_component_rule", ledger.matches_component_rule);
  }
}

void cmd_verify(const Options& opt, Report& rep) {
  SuiteOptions so;
  so.seed = opt.seed;
  so.jobs = resolve_jobs(opt.jobs);
  auto& r = rep.results();
  r["suite"] = opt.suite;
  if (opt.suite == "series") {
    so.trials = opt.trials.value_or(100);
    so.trunc = opt.trunc.value_or(8);
    const auto res = run_series_suite(so);
    r["leading"] = Json{{"trials", res.leading_trials}, {"pass", res.leading_pass}, {"comparisons", res.leading_comparisons},
                        {"resamples", res.leading_resamples}};
    r["example"] = Json{{"trials", res.example_trials}, {"pass", res.example_pass}, {"resamples", res.example_resamples},
                        {"sample", to_json(res.sample)}, {"unit_draw", to_json(res.unit_sample)}};
    r["ring_axioms"] = Json{{"checks", res.ring_checks}, {"pass", res.ring_pass}};
    r["series_sqrt"] = Json{{"checks", res.sqrt_checks}, {"pass", res.sqrt_pass}};
    r["newton_merge"] = Json{{"checks", res.newton_checks}, {"pass", res.newton_pass}};
    rep.check("leading_coeff_product", res.leading_pass == res.leading_trials, res.first_leading_failure);
    rep.check("example_table", res.example_pass == res.example_trials,
              std::to_string(res.example_pass) + "/" + std::to_string(res.example_trials));
    rep.check("ring_axioms", res.ring_pass == res.ring_checks);
    rep.check("series_sqrt_roundtrip", res.sqrt_pass == res.sqrt_checks);
    rep.check("newton_polygon_merge", res.newton_pass == res.newton_checks);
  } else if (opt.suite == "veronese") {
    so.trials = opt.trials.value_or(200);
    std::vector<int> degrees;
    if (opt.e) {
      if (*opt.e < 0) throw Error(ErrorCode::InvalidArgument, "--e must be non-negative");
      degrees.push_back(*opt.e);
    } else {
      for (int e = 1; e <= 6; ++e) degrees.push_back(e);
    }
    const auto res = run_veronese_suite(so, degrees);
    r["degrees"] = res.degrees;
    r["fiber"] = Json{{"trials", res.fiber_trials}, {"pass", res.fiber_pass}, {"sign_invariant", res.sign_pass}};
    r["chains"] = Json{{"trials", res.chain_trials}, {"products", res.chain_products}, {"pass", res.chain_pass},
                       {"endpoint_consistent", res.chain_consistency_pass}};
    rep.check("fiber_is_plus_minus_y", res.fiber_pass == res.fiber_trials);
    rep.check("sign_invariance", res.sign_pass == res.fiber_trials);
    rep.check("cross_product_recovery", res.chain_pass == res.chain_products);
    rep.check("chained_endpoints", res.chain_consistency_pass == res.chain_trials);
  } else if (opt.suite == "local") {
    so.trials = opt.trials.value_or(20);
    so.trunc = opt.trunc.value_or(12);
    std::vector<Partition> parts =
        opt.partition.empty() ? default_local_partitions() : std::vector<Partition>{parse_partition(opt.partition)};
    const auto res = run_local_suite(so, parts);
    Json entries = Json::array();
    for (const auto& e : res) {
      const auto& c = e.check;
      std::ostringstream rate;
      rate << std::fixed << std::setprecision(4) << c.mismatch_rate;
      entries.push_back(Json{{"partition", to_json(e.partition)},
                             {"predicted", to_json(c.predicted)},
                             {"trials", c.trials},
                             {"matched", c.matched_trials},
                             {"draws", c.draws},
                             {"degenerate", c.degenerate},
                             {"mismatches", c.mismatches},
                             {"mismatch_rate", rate.str()},
                             {"even_char_poly", c.odd_char_polys == 0},
                             {"square_constants", c.square_constants},
                             {"unresolved_constants", c.unresolved_constants}});
      rep.check("newton_vs_deg " + e.partition.str(), c.pass,
                std::to_string(c.matched_trials) + "/" + std::to_string(c.trials) + " matched, mismatch rate " + rate.str());
      rep.check("char_poly_even " + e.partition.str(), c.odd_char_polys == 0);
    }
    r["partitions"] = entries;
    const auto kd = companion_kernel_diagnostic(so.trunc);
    r["kernel_diagnostic"] = Json{{"kernel_rank", kd.kernel_rank}, {"reduction_rank", kd.reduction_rank},
                                  {"pivot_valuations", kd.pivot_valuations}, {"annihilated", kd.annihilated}};
    rep.check("kernel_annihilated", kd.annihilated);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + opt.suite + "'");
  }
}

void cmd_sweep(const Options& opt, Report& rep) {
  std::set<std::string> families(opt.checks.begin(), opt.checks.end());
  for (const auto& f : families)
    if (f != "all" && std::find(sweep_families().begin(), sweep_families().end(), f) == sweep_families().end())
      throw Error(ErrorCode::InvalidArgument, "unknown check family '" + f + "'");
  if (opt.max_total < 2 || opt.max_total % 2 != 0) throw Error(ErrorCode::InvalidArgument, "--max-2n must be even and at least 2");
  const auto records = run_sweep(opt.max_total, families, resolve_jobs(opt.jobs), opt.oracle_cap);
  Json arr = Json::array();
  for (const auto& rec : records) {
    arr.push_back(Json{{"family", rec.family}, {"total", rec.total}, {"cases", rec.cases}, {"failures", rec.failures}});
    rep.check(rec.family + " 2n=" + std::to_string(rec.total), rec.pass(),
              std::to_string(rec.cases) + " cases" + (rec.pass() ? "" : "; first failure: " + rec.first_failure));
  }
  rep.results()["records"] = arr;
}

Json inputs_of(const std::string& command, const Options& opt) {
  Json in = Json::object();
  if (!opt.partition.empty()) in["partition"] = opt.partition;
  if (!opt.gl.empty()) in["gl"] = opt.gl;
  if (opt.q) in["q"] = *opt.q;
  if (!opt.levi.empty()) in["levi"] = opt.levi;
  if (opt.genus) in["genus"] = *opt.genus;
  if (command == "verify") {
    in["suite"] = opt.suite;
    in["seed"] = opt.seed;
    if (opt.trunc) in["trunc"] = *opt.trunc;
    if (opt.trials) in["trials"] = *opt.trials;
    if (opt.e) in["e"] = *opt.e;
  }
  if (command == "sweep") {
    in["max_2n"] = opt.max_total;
    in["check"] = opt.checks;
  }
  if (command == "polarize") in["search_cap"] = opt.search_cap;
  return in;
}

void render_table(const Json& env, std::ostream& os) {
  os << "command  " << env["command"].get<std::string>() << "\n";
  os << "version  " << env["version"].get<std::string>() << "\n";
  if (env.contains("error")) {
    os << "error    " << env["error"]["code"].get<std::string>() << ": " << env["error"]["message"].get<std::string>() << "\n";
  }
  for (const auto& [key, value] : env["results"].items()) {
    os << std::left << std::setw(24) << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& c : env["checks"]) {
    os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) os << "  (" << detail << ")";
    os << "\n";
  }
}

int emit(const Report& rep, const std::string& format) {
  const Json env = rep.envelope();
  if (format == "table") render_table(env, std::cout);
  else std::cout << env.dump(2) << "\n";
  if (rep.has_error()) return 2;
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type-D nilpotent orbit combinatorics and Hitchin-base ledgers"};
  app.set_version_flag("--version", std::string(ORBITA_VERSION));
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads (default: $ORBITA_JOBS, else all cores)");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", opt.jobs, "Worker threads (default: $ORBITA_JOBS, else all cores)");
  };
  auto add_levi = [&](CLI::App* sub) {
    sub->add_option("--gl", opt.gl, "gl block sizes, comma separated");
    sub->add_option("--q", opt.q, "so block size (even, not 2)");
    sub->add_option("--levi", opt.levi, "Levi type as 'gl:q', e.g. 6,3:0");
  };

  auto* classify = app.add_subcommand("classify", "Blocks, speciality and orbit invariants of a type-D partition");
  classify->add_option("--partition", opt.partition, "Comma-separated parts")->required();
  add_common(classify);

  auto* collapse = app.add_subcommand("collapse", "D-collapse of any partition of 2n");
  collapse->add_option("--partition", opt.partition, "Comma-separated parts")->required();
  collapse->add_option("--oracle-cap", opt.oracle_cap, "Largest 2n compared with the dominance oracle")->capture_default_str();
  add_common(collapse);

  auto* induce_cmd = app.add_subcommand("induce", "Induced partition, I(P), Richardson orbit and Springer degree");
  add_levi(induce_cmd);
  add_common(induce_cmd);

  auto* polarize = app.add_subcommand("polarize", "All Levi types polarizing a partition");
  polarize->add_option("--partition", opt.partition, "Comma-separated parts")->required();
  polarize->add_option("--search-cap", opt.search_cap, "Largest 2n searched")->capture_default_str();
  add_common(polarize);

  auto* base = app.add_subcommand("base-report", "Square-root relations, chains, smoothness and the polarized ledger");
  base->add_option("--partition", opt.partition, "Comma-separated parts")->required();
  add_levi(base);
  base->add_option("--genus", opt.genus, "Curve genus for ambient dimensions");
  add_common(base);

  auto* verify = app.add_subcommand("verify", "Seeded symbolic verification suites");
  verify->add_option("--suite", opt.suite, "series | veronese | local")->required()->check(CLI::IsMember({"series", "veronese", "local"}));
  verify->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", opt.trials, "Trials (default 100 series, 200 veronese, 20 local)");
  verify->add_option("--trunc", opt.trunc, "Truncation order (default 8 series, 12 local)");
  verify->add_option("--e", opt.e, "Square-root degree for the veronese suite (default 1..6)");
  verify->add_option("--partition", opt.partition, "Partition for the local suite (default: six small cases)");
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "Exhaustive cross-module checks up to 2n");
  sweep->add_option("--max-2n", opt.max_total, "Largest 2n")->capture_default_str();
  sweep->add_option("--check", opt.checks, "all, or any of collapse special invariants base richardson ledger")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--oracle-cap", opt.oracle_cap, "Largest 2n compared with the dominance oracle")->capture_default_str();
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    Report rep(command, Json::object());
    rep.fail("ParseError", e.what());
    return emit(rep, opt.format == "table" ? "table" : "json");
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report rep(command, inputs_of(command, opt));
  try {
    if (command == "classify") cmd_classify(opt, rep);
    else if (command == "collapse") cmd_collapse(opt, rep);
    else if (command == "induce") cmd_induce(opt, rep);
    else if (command == "polarize") cmd_polarize(opt, rep);
    else if (command == "base-report") cmd_base_report(opt, rep);
    else if (command == "verify") cmd_verify(opt, rep);
    else if (command == "sweep") cmd_sweep(opt, rep);
  } catch (const Error& e) {
    rep.fail(std::string(to_string(e.code())), e.what());
  }
  return emit(rep, opt.format);
}
