#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linecover/graph.hpp"
#include "linecover/recognition.hpp"
#include "linecover/transforms.hpp"

namespace linecover {

struct RunConfig {
  uint64_t seed = 0;
  int budget_vertices = 16;
  int budget_edges = 12;
  int k_max = 4;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Generator spec strings: "complete:4", "cycle:5", "path:3", "star:6",
// "mycielski:4", "matching:2", "random:10:0.3" (random draws from seed).
NamedGraph parse_graph_spec(const std::string& spec, uint64_t seed);
std::vector<NamedGraph> parse_graph_specs(const std::string& csv, uint64_t seed);

// ---- formula table: exact_elb vs ceil(lg lg chi) + 1 ----

struct FormulaRow {
  std::string name;
  int n = 0;
  int m = 0;
  bool skipped = false;
  std::string skip_reason;
  int chi = 0;
  int formula = 0;
  int elb = 0;
  bool vacuous_pairs = false;  // no adjacent edge pair: elb = 0 by convention
  bool match = false;          // always true for vacuous rows (out of scope)
};

struct FormulaReport {
  std::vector<FormulaRow> rows;
  bool all_match = false;  // over non-skipped, non-vacuous rows
};

FormulaReport run_formula_table(const std::vector<NamedGraph>& graphs,
                                const RunConfig& config);

// ---- complete-graph line cover report ----

struct KnRow {
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  int family_size = 0;   // verified 3-suitable family on chi = n colors
  int cover_size = 0;    // verified equivalence cover of L(K_n)
  bool cover_verified = false;
  double lg_lg_n = 0.0;
  int yardstick = 0;     // ceil(f(n)) + 1
};

struct KnReport {
  std::vector<KnRow> rows;
  bool all_verified = false;
};

KnReport run_kn_report(const std::vector<int>& ns, const RunConfig& config);

// ---- chordal lower bound check ----

struct LowerBoundRow {
  std::string name;
  int n = 0;
  int m = 0;
  bool skipped = false;
  std::string skip_reason;
  int chi = 0;
  int bound = 0;               // ceil(lg lg chi) + 1
  int line_vertices = 0;
  int exhausted_below = 0;     // sizes 1..exhausted_below checked exhaustively
  bool found_below_bound = false;  // hard failure if true
  int best_cover_size = 0;     // smallest verified chordal cover found
  bool certified_exact = false;  // best_cover_size == bound and below is exhausted
};

struct LowerBoundReport {
  std::vector<LowerBoundRow> rows;
  bool violation = false;
};

LowerBoundReport run_lower_bound_check(const std::vector<NamedGraph>& graphs,
                                       const RunConfig& config);

// ---- triangle-free iterate trend ----

struct TrendRow {
  int k = 0;
  bool skipped = false;
  std::string skip_reason;
  int n = 0;
  int m = 0;
  int chi = 0;
  int bound = 0;
  int cover_size = 0;
  bool cover_verified = false;
};

struct TrendReport {
  std::vector<TrendRow> rows;
  bool bounds_nondecreasing = false;
  bool bounds_within_cover = false;
};

TrendReport run_trend_report(int k_min, int k_max, const RunConfig& config);

// ---- verification dispatch over JSON documents ----

struct VerifyVerdict {
  std::string doc_type;  // "cover" | "orientation-family" | "orientation" | "order-family"
  bool pass = false;
  nlohmann::json details;
};

VerifyVerdict run_verify(const nlohmann::json& doc);

// ---- serialization; every document embeds version, seed, budgets ----

nlohmann::json report_to_json(const FormulaReport& r, const RunConfig& c);
nlohmann::json report_to_json(const KnReport& r, const RunConfig& c);
nlohmann::json report_to_json(const LowerBoundReport& r, const RunConfig& c);
nlohmann::json report_to_json(const TrendReport& r, const RunConfig& c);
nlohmann::json verdict_to_json(const VerifyVerdict& v);

std::string report_to_text(const FormulaReport& r, const RunConfig& c);
std::string report_to_text(const KnReport& r, const RunConfig& c);
std::string report_to_text(const LowerBoundReport& r, const RunConfig& c);
std::string report_to_text(const TrendReport& r, const RunConfig& c);
std::string verdict_to_text(const VerifyVerdict& v);

}  // namespace linecover
