#pragma once

// JSON rendering of library results for the command-line tool.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbita/hitchin_base.hpp"
#include "orbita/local_model.hpp"
#include "orbita/orbit_invariants.hpp"
#include "orbita/partition.hpp"
#include "orbita/richardson.hpp"
#include "orbita/series.hpp"
#include "orbita/suites.hpp"
#include "orbita/sweep.hpp"

namespace orbita::cli {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Report {
 public:
  Report(std::string command, Json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {
    digest_ = fnv1a_hex(command_ + inputs_.dump());
  }

  Json& results() { return results_; }

  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    checks_.push_back(Json{{"name", name}, {"pass", pass}, {"detail", detail}, {"inputs-digest", digest_}});
    all_pass_ = all_pass_ && pass;
  }

  void fail(const std::string& code, const std::string& message) {
    error_ = Json{{"code", code}, {"message", message}};
  }

  bool all_pass() const noexcept { return all_pass_ && error_.is_null(); }
  bool has_error() const noexcept { return !error_.is_null(); }

  Json envelope() const {
    Json out{{"command", command_}, {"version", ORBITA_VERSION}, {"inputs", inputs_},
             {"results", results_.is_null() ? Json::object() : results_}, {"checks", checks_.is_null() ? Json::array() : checks_}};
    if (!error_.is_null()) out["error"] = error_;
    return out;
  }

 private:
  std::string command_;
  Json inputs_;
  std::string digest_;
  Json results_ = Json::object();
  Json checks_ = Json::array();
  Json error_;
  bool all_pass_ = true;
};

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const BlockDecomposition& blocks) {
  Json arr = Json::array();
  for (const auto& b : blocks.blocks()) arr.push_back(Json{{"type", std::string(to_string(b.type))}, {"parts", b.parts}});
  return arr;
}

inline Json to_json(const LeviType& levi) {
  Json side = nullptr;
  if (levi.side()) side = std::string(to_string(*levi.side()));
  return Json{{"gl", levi.gl_parts()}, {"q", levi.q()}, {"side", side}};
}

inline Json to_json(const RelationSpec& rel) {
  Json idx = Json::array();
  for (const auto& c : rel.coeff_indices) idx.push_back(c.m);
  return Json{{"run_start", rel.run_start}, {"k", rel.k}, {"kind", std::string(to_string(rel.kind))},
              {"part", rel.part_value}, {"coeff_indices", idx}};
}

inline Json to_json(const ChainSignature& ch) {
  return Json{{"e", ch.e_vec},
              {"relations", ch.relations},
              {"anchored_c0", ch.anchored_c0},
              {"anchored_pf", ch.anchored_pf},
              {"veronese_dim", ch.veronese_dim()},
              {"consumed_coordinates", ch.consumed_coordinates()}};
}

inline Json to_json(const NewtonSegment& s) { return Json{{"slope", s.slope.get_str()}, {"length", s.length}}; }

inline Json to_json(const std::vector<NewtonSegment>& segs) {
  Json arr = Json::array();
  for (const auto& s : segs) arr.push_back(to_json(s));
  return arr;
}

inline Json to_json(const ExampleSuiteResult& r) {
  Json table = Json::array();
  for (const auto& e : r.table)
    table.push_back(Json{{"lambda_power", e.lambda_power},
                         {"valuation", e.valuation},
                         {"formula", e.formula},
                         {"expected", e.expected.get_str()},
                         {"actual", e.actual.get_str()},
                         {"pass", e.pass}});
  Json h = Json::array(), k = Json::array();
  for (const auto& x : r.h_bar) h.push_back(x.get_str());
  for (const auto& x : r.kappa) k.push_back(x.get_str());
  return Json{{"h_bar", h}, {"kappa", k}, {"table", table}, {"p1_square", r.p1_square}, {"p3_square", r.p3_square},
              {"resamples", r.resamples}, {"pass", r.pass}};
}

}  // namespace orbita::cli
