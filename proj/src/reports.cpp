#include "linecover/reports.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "linecover/errors.hpp"
#include "linecover/formulas.hpp"
#include "linecover/json_io.hpp"
#include "linecover/orders.hpp"
#include "linecover/orientations.hpp"
#include "linecover/version.hpp"

namespace linecover {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw ParseError(what + ": trailing characters in '" + s + "'");
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not an integer");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    double value = std::stod(s, &used);
    if (used != s.size()) throw ParseError(what + ": trailing characters in '" + s + "'");
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not a number");
  }
}

Graph generate_matching(int k) {
  if (k < 1) throw std::invalid_argument("matching needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Graph::build(2 * k, std::move(edges));
}

bool has_adjacent_pair(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2) return true;
  }
  return false;
}

// ---- chordal cover search helpers (lower bound check) ----

// number of size-s covers of E line edges, capped; 0 means "too many"
long long exhaustive_state_count(int s, int line_edges, long long limit) {
  const long long per_edge = (1ll << s) - 1;
  long long total = 1;
  for (int i = 0; i < line_edges; ++i) {
    total *= per_edge;
    if (total > limit) return 0;
  }
  return total;
}

Cover cover_from_members(const Graph& line, std::vector<std::vector<int>> members) {
  Cover c;
  c.target = line;
  c.claimed_class = CoverClass::chordal;
  c.members = std::move(members);
  return c;
}

// every assignment of each line edge to a nonempty member subset, members
// re-checked for chordality through the public verifier
std::optional<Cover> exhaustive_chordal_cover(const Graph& line, int s, long long limit) {
  const int E = line.edge_count();
  if (s == 1) {
    std::vector<int> all(E);
    for (int i = 0; i < E; ++i) all[i] = i;
    Cover c = cover_from_members(line, {all});
    if (cover_verify(c).pass()) return c;
    return std::nullopt;
  }
  if (exhaustive_state_count(s, E, limit) == 0) return std::nullopt;
  const int per_edge = (1 << s) - 1;
  std::vector<int> assign(E, 0);  // value + 1 = member mask
  while (true) {
    std::vector<std::vector<int>> members(s);
    for (int e = 0; e < E; ++e) {
      int mask = assign[e] + 1;
      for (int b = 0; b < s; ++b) {
        if (mask & (1 << b)) members[b].push_back(e);
      }
    }
    Cover c = cover_from_members(line, std::move(members));
    if (cover_verify(c).pass()) return c;
    int pos = 0;
    while (pos < E && assign[pos] == per_edge - 1) {
      assign[pos] = 0;
      ++pos;
    }
    if (pos == E) break;
    ++assign[pos];
  }
  return std::nullopt;
}

std::optional<Cover> randomized_chordal_cover(const Graph& line, int s, int attempts,
                                              std::mt19937_64& rng) {
  const int E = line.edge_count();
  for (int t = 0; t < attempts; ++t) {
    std::vector<std::vector<int>> members(s);
    for (int e = 0; e < E; ++e) {
      members[rng() % static_cast<uint64_t>(s)].push_back(e);
    }
    Cover c = cover_from_members(line, std::move(members));
    if (cover_verify(c).pass()) return c;
  }
  return std::nullopt;
}

// ---- rendering helpers ----

json config_to_json(const RunConfig& c) {
  return json{{"version", kVersion},
              {"seed", c.seed},
              {"budgets", json{{"vertices", c.budget_vertices},
                               {"edges", c.budget_edges},
                               {"k_max", c.k_max}}}};
}

std::string config_to_text(const RunConfig& c) {
  std::ostringstream out;
  out << "version " << kVersion << "  seed " << c.seed << "  budgets: vertices "
      << c.budget_vertices << ", edges " << c.budget_edges << ", k_max " << c.k_max;
  return out.str();
}

std::string table_text(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

std::string fmt_double(double x) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << x;
  return out.str();
}

}  // namespace

NamedGraph parse_graph_spec(const std::string& raw, uint64_t seed) {
  const std::string spec = trim(raw);
  std::vector<std::string> parts = split(spec, ':');
  if (parts.empty() || parts[0].empty()) throw ParseError("empty graph spec");
  const std::string& kind = parts[0];
  auto need = [&](size_t count) {
    if (parts.size() != count) {
      throw ParseError("graph spec '" + spec + "' needs " + std::to_string(count - 1) +
                       " parameter(s)");
    }
  };
  try {
    if (kind == "complete") {
      need(2);
      return {spec, generate_complete(parse_int(parts[1], spec))};
    }
    if (kind == "cycle") {
      need(2);
      return {spec, generate_cycle(parse_int(parts[1], spec))};
    }
    if (kind == "path") {
      need(2);
      return {spec, generate_path(parse_int(parts[1], spec))};
    }
    if (kind == "star") {
      need(2);
      return {spec, generate_star(parse_int(parts[1], spec))};
    }
    if (kind == "mycielski") {
      need(2);
      return {spec, generate_mycielski_iterate(parse_int(parts[1], spec))};
    }
    if (kind == "matching") {
      need(2);
      return {spec, generate_matching(parse_int(parts[1], spec))};
    }
    if (kind == "random") {
      need(3);
      int n = parse_int(parts[1], spec);
      double p = parse_double(parts[2], spec);
      if (p < 0.0 || p > 1.0) throw ParseError("graph spec '" + spec + "': p must be in [0, 1]");
      return {spec, generate_random(n, p, seed)};
    }
  } catch (const std::invalid_argument& ex) {
    throw ParseError("graph spec '" + spec + "': " + ex.what());
  }
  throw ParseError("unknown graph kind '" + kind + "'");
}

std::vector<NamedGraph> parse_graph_specs(const std::string& csv, uint64_t seed) {
  std::vector<NamedGraph> out;
  uint64_t offset = 0;
  for (const std::string& item : split(csv, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_graph_spec(item, seed + offset));
    ++offset;
  }
  if (out.empty()) throw ParseError("no graph specs given");
  return out;
}

FormulaReport run_formula_table(const std::vector<NamedGraph>& graphs,
                                const RunConfig& config) {
  FormulaReport report;
  report.all_match = true;
  for (const NamedGraph& ng : graphs) {
    FormulaRow row;
    row.name = ng.name;
    row.n = ng.graph.vertex_count();
    row.m = ng.graph.edge_count();
    try {
      ChromaticResult cr = chromatic_number_exact(ng.graph, config.budget_vertices);
      row.chi = cr.chi;
      std::optional<int> elb = exact_elb(ng.graph, config.k_max, config.budget_edges);
      if (!elb) {
        row.skipped = true;
        row.skip_reason = "exact elbow minimum exceeds k_max";
      } else {
        row.elb = *elb;
        row.vacuous_pairs = !has_adjacent_pair(ng.graph);
        row.formula = row.chi >= 2 ? ceil_lg_lg(row.chi) + 1 : 0;
        row.match = row.vacuous_pairs || row.elb == row.formula;
        if (!row.match) report.all_match = false;
      }
    } catch (const BudgetExceeded& ex) {
      row.skipped = true;
      row.skip_reason = ex.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

KnReport run_kn_report(const std::vector<int>& ns, const RunConfig& config) {
  KnReport report;
  report.all_verified = true;
  for (int n : ns) {
    KnRow row;
    row.n = n;
    if (n < 3 || n > 64) {
      row.skipped = true;
      row.skip_reason = "n must be within [3, 64]";
      report.rows.push_back(std::move(row));
      continue;
    }
    try {
      Graph kn = generate_complete(n);
      PipelineResult pr = build_equivalence_cover_pipeline(kn, config.budget_vertices);
      row.family_size = static_cast<int>(pr.family.orders.size());
      row.cover_size = static_cast<int>(pr.cover.members.size());
      row.cover_verified = cover_verify(pr.cover).pass();
      row.lg_lg_n = std::log2(std::log2(static_cast<double>(n)));
      row.yardstick = static_cast<int>(std::ceil(yardstick_f(n))) + 1;
      if (!row.cover_verified) report.all_verified = false;
    } catch (const ConstructionFailure& ex) {
      row.skipped = true;
      row.skip_reason = ex.what();
    } catch (const BudgetExceeded& ex) {
      row.skipped = true;
      row.skip_reason = ex.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

LowerBoundReport run_lower_bound_check(const std::vector<NamedGraph>& graphs,
                                       const RunConfig& config) {
  constexpr long long kStateLimit = 100000;
  constexpr int kAttempts = 200;
  LowerBoundReport report;
  uint64_t row_index = 0;
  for (const NamedGraph& ng : graphs) {
    LowerBoundRow row;
    row.name = ng.name;
    row.n = ng.graph.vertex_count();
    row.m = ng.graph.edge_count();
    ++row_index;
    if (!is_triangle_free(ng.graph)) {
      row.skipped = true;
      row.skip_reason = "input must be triangle-free";
      report.rows.push_back(std::move(row));
      continue;
    }
    if (row.m == 0) {
      row.skipped = true;
      row.skip_reason = "no edges, nothing to cover";
      report.rows.push_back(std::move(row));
      continue;
    }
    try {
      ChromaticResult cr = chromatic_number_exact(ng.graph, config.budget_vertices);
      row.chi = cr.chi;
      row.bound = ceil_lg_lg(row.chi) + 1;
      LineGraphMap lg = line_graph(ng.graph);
      row.line_vertices = lg.line.vertex_count();
      const int E = lg.line.edge_count();
      std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ull + row_index);

      // exhaust sizes below the bound for as long as the state count allows
      int exhausted = 0;
      bool found_below = false;
      for (int s = 1; s < row.bound; ++s) {
        if (s > 1 && exhaustive_state_count(s, E, kStateLimit) == 0) break;
        if (exhaustive_chordal_cover(lg.line, s, kStateLimit)) found_below = true;
        exhausted = s;
      }
      row.exhausted_below = exhausted;
      for (int s = exhausted + 1; s < row.bound && !found_below; ++s) {
        if (randomized_chordal_cover(lg.line, s, kAttempts, rng)) found_below = true;
      }
      row.found_below_bound = found_below;
      if (found_below) report.violation = true;

      // smallest verified cover at or above the bound
      int best = 0;
      if (exhausted == row.bound - 1) {
        for (int s = row.bound; s <= row.bound + 4; ++s) {
          if (s > 1 && exhaustive_state_count(s, E, kStateLimit) == 0) break;
          if (exhaustive_chordal_cover(lg.line, s, kStateLimit)) {
            best = s;
            break;
          }
        }
      }
      if (best == 0) {
        PipelineResult pr = build_equivalence_cover_pipeline(ng.graph, config.budget_vertices);
        Cover as_chordal = with_cover_class(pr.cover, CoverClass::chordal);
        if (!cover_verify(as_chordal).pass()) {
          throw std::logic_error("equivalence cover failed the chordal re-check");
        }
        best = static_cast<int>(as_chordal.members.size());
        for (int s = row.bound; s < best; ++s) {
          if (randomized_chordal_cover(lg.line, s, kAttempts, rng)) {
            best = s;
            break;
          }
        }
      }
      row.best_cover_size = best;
      row.certified_exact =
          !found_below && exhausted == row.bound - 1 && best == row.bound;
    } catch (const BudgetExceeded& ex) {
      row.skipped = true;
      row.skip_reason = ex.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

TrendReport run_trend_report(int k_min, int k_max, const RunConfig& config) {
  TrendReport report;
  report.bounds_nondecreasing = true;
  report.bounds_within_cover = true;
  int prev_bound = 0;
  for (int k = k_min; k <= k_max; ++k) {
    TrendRow row;
    row.k = k;
    if (k < 2) {
      row.skipped = true;
      row.skip_reason = "iterates start at k = 2";
      report.rows.push_back(std::move(row));
      continue;
    }
    if (k > 5) {
      row.skipped = true;
      row.skip_reason = "exact coloring budget covers iterates up to k = 5";
      report.rows.push_back(std::move(row));
      continue;
    }
    Graph g = generate_mycielski_iterate(k);
    row.n = g.vertex_count();
    row.m = g.edge_count();
    const int budget = std::max(config.budget_vertices, g.vertex_count());
    ChromaticResult cr = chromatic_number_exact(g, budget);
    row.chi = cr.chi;
    row.bound = row.chi >= 2 ? ceil_lg_lg(row.chi) + 1 : 0;
    PipelineResult pr = build_equivalence_cover_pipeline(g, budget);
    row.cover_size = static_cast<int>(pr.cover.members.size());
    row.cover_verified = cover_verify(pr.cover).pass();
    if (row.bound < prev_bound) report.bounds_nondecreasing = false;
    if (!row.cover_verified || row.bound > row.cover_size) {
      report.bounds_within_cover = false;
    }
    prev_bound = row.bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyVerdict run_verify(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  VerifyVerdict verdict;
  if (doc.contains("members") && doc.contains("class")) {
    verdict.doc_type = "cover";
    Cover c = cover_from_json(doc);
    CoverReport r = cover_verify(c);
    verdict.pass = r.pass();
    json missing = json::array();
    for (int idx : r.missing_edges) {
      const Edge& e = c.target.edge(idx);
      missing.push_back(json{{"index", idx}, {"edge", json::array({e.u, e.v})}});
    }
    verdict.details = json{{"class", cover_class_name(c.claimed_class)},
                           {"size", r.size},
                           {"union_ok", r.union_ok},
                           {"missing_edges", std::move(missing)},
                           {"failed_members", r.failed_members},
                           {"malformed_members", r.malformed_members}};
    return verdict;
  }
  if (doc.contains("orientations")) {
    verdict.doc_type = "orientation-family";
    OrientationFamily fam = orientation_family_from_json(doc);
    if (fam.claimed_kind == CoverKindClaim::none) {
      verdict.pass = false;
      verdict.details = json{{"kind", cover_kind_name(fam.claimed_kind)},
                             {"members", fam.members.size()},
                             {"reason", "family claims no cover kind"}};
      return verdict;
    }
    ElbowMode mode = fam.claimed_kind == CoverKindClaim::in_elbow_cover
                         ? ElbowMode::in_elbow
                         : ElbowMode::elbow;
    OrientationCoverReport r = verify_orientation_cover_report(fam, mode);
    verdict.pass = r.pass;
    json uncovered = json::array();
    for (auto [e, f] : r.uncovered) {
      const Edge& ee = fam.graph.edge(e);
      const Edge& fe = fam.graph.edge(f);
      uncovered.push_back(json{{"pair", json::array({e, f})},
                               {"edges", json::array({json::array({ee.u, ee.v}),
                                                      json::array({fe.u, fe.v})})}});
    }
    verdict.details = json{{"kind", cover_kind_name(fam.claimed_kind)},
                           {"members", fam.members.size()},
                           {"uncovered", std::move(uncovered)}};
    return verdict;
  }
  if (doc.contains("dirs")) {
    verdict.doc_type = "orientation";
    auto [g, o] = orientation_from_json(doc);
    verdict.pass = true;  // parse enforces well-formedness
    verdict.details = json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
    return verdict;
  }
  if (doc.contains("orders")) {
    verdict.doc_type = "order-family";
    OrderFamily f = order_family_from_json(doc);
    verdict.pass = true;  // parse enforces permutation well-formedness
    verdict.details = json{{"C", f.universe_size},
                           {"size", f.orders.size()},
                           {"suitable3", is_3_suitable(f)},
                           {"mixing3", is_3_mixing(f)}};
    return verdict;
  }
  throw ParseError("unrecognized document type (expected cover, orientation family, "
                   "orientation, or order family)");
}

// ---- JSON rendering ----

nlohmann::json report_to_json(const FormulaReport& r, const RunConfig& c) {
  json rows = json::array();
  for (const FormulaRow& row : r.rows) {
    rows.push_back(json{{"graph", row.name},
                        {"n", row.n},
                        {"m", row.m},
                        {"skipped", row.skipped},
                        {"skip_reason", row.skip_reason},
                        {"chi", row.chi},
                        {"formula", row.formula},
                        {"elb", row.elb},
                        {"vacuous_pairs", row.vacuous_pairs},
                        {"match", row.match}});
  }
  json out = config_to_json(c);
  out["report"] = "theorem1";
  out["rows"] = std::move(rows);
  out["all_match"] = r.all_match;
  return out;
}

nlohmann::json report_to_json(const KnReport& r, const RunConfig& c) {
  json rows = json::array();
  for (const KnRow& row : r.rows) {
    rows.push_back(json{{"n", row.n},
                        {"skipped", row.skipped},
                        {"skip_reason", row.skip_reason},
                        {"family_size", row.family_size},
                        {"cover_size", row.cover_size},
                        {"cover_verified", row.cover_verified},
                        {"lg_lg_n", row.lg_lg_n},
                        {"yardstick", row.yardstick}});
  }
  json out = config_to_json(c);
  out["report"] = "kn";
  out["rows"] = std::move(rows);
  out["all_verified"] = r.all_verified;
  return out;
}

nlohmann::json report_to_json(const LowerBoundReport& r, const RunConfig& c) {
  json rows = json::array();
  for (const LowerBoundRow& row : r.rows) {
    rows.push_back(json{{"graph", row.name},
                        {"n", row.n},
                        {"m", row.m},
                        {"skipped", row.skipped},
                        {"skip_reason", row.skip_reason},
                        {"chi", row.chi},
                        {"bound", row.bound},
                        {"line_vertices", row.line_vertices},
                        {"exhausted_below", row.exhausted_below},
                        {"found_below_bound", row.found_below_bound},
                        {"best_cover_size", row.best_cover_size},
                        {"certified_exact", row.certified_exact}});
  }
  json out = config_to_json(c);
  out["report"] = "cor3";
  out["rows"] = std::move(rows);
  out["violation"] = r.violation;
  return out;
}

nlohmann::json report_to_json(const TrendReport& r, const RunConfig& c) {
  json rows = json::array();
  for (const TrendRow& row : r.rows) {
    rows.push_back(json{{"k", row.k},
                        {"skipped", row.skipped},
                        {"skip_reason", row.skip_reason},
                        {"n", row.n},
                        {"m", row.m},
                        {"chi", row.chi},
                        {"bound", row.bound},
                        {"cover_size", row.cover_size},
                        {"cover_verified", row.cover_verified}});
  }
  json out = config_to_json(c);
  out["report"] = "trend";
  out["rows"] = std::move(rows);
  out["bounds_nondecreasing"] = r.bounds_nondecreasing;
  out["bounds_within_cover"] = r.bounds_within_cover;
  return out;
}

nlohmann::json verdict_to_json(const VerifyVerdict& v) {
  return json{{"version", kVersion},
              {"doc_type", v.doc_type},
              {"pass", v.pass},
              {"details", v.details}};
}

// ---- text rendering ----

std::string report_to_text(const FormulaReport& r, const RunConfig& c) {
  std::vector<std::vector<std::string>> rows;
  for (const FormulaRow& row : r.rows) {
    std::string verdict;
    if (row.skipped) {
      verdict = "skipped: " + row.skip_reason;
    } else if (row.vacuous_pairs) {
      verdict = "vacuous-pair convention";
    } else {
      verdict = row.match ? "match" : "MISMATCH";
    }
    rows.push_back({row.name, std::to_string(row.n), std::to_string(row.m),
                    row.skipped ? "-" : std::to_string(row.chi),
                    row.skipped ? "-" : std::to_string(row.formula),
                    row.skipped ? "-" : std::to_string(row.elb), verdict});
  }
  std::ostringstream out;
  out << "exact elbow cover size vs ceil(lg lg chi) + 1\n" << config_to_text(c) << "\n\n";
  out << table_text({"graph", "n", "m", "chi", "formula", "elb", "verdict"}, rows);
  out << "\nall rows match: " << (r.all_match ? "yes" : "NO") << "\n";
  return out.str();
}

std::string report_to_text(const KnReport& r, const RunConfig& c) {
  std::vector<std::vector<std::string>> rows;
  for (const KnRow& row : r.rows) {
    if (row.skipped) {
      rows.push_back({std::to_string(row.n), "-", "-", "-", "-",
                      "skipped: " + row.skip_reason});
    } else {
      rows.push_back({std::to_string(row.n), std::to_string(row.family_size),
                      std::to_string(row.cover_size), fmt_double(row.lg_lg_n),
                      std::to_string(row.yardstick),
                      row.cover_verified ? "verified" : "FAILED"});
    }
  }
  std::ostringstream out;
  out << "equivalence covers of line graphs of complete graphs\n"
      << config_to_text(c) << "\n\n";
  out << table_text({"n", "family", "cover", "lg lg n", "yardstick", "verdict"}, rows);
  out << "\nall covers verified: " << (r.all_verified ? "yes" : "NO") << "\n";
  return out.str();
}

std::string report_to_text(const LowerBoundReport& r, const RunConfig& c) {
  std::vector<std::vector<std::string>> rows;
  for (const LowerBoundRow& row : r.rows) {
    if (row.skipped) {
      rows.push_back({row.name, std::to_string(row.n), std::to_string(row.m), "-", "-",
                      "-", "-", "skipped: " + row.skip_reason});
    } else {
      std::string verdict;
      if (row.found_below_bound) {
        verdict = "BOUND VIOLATED";
      } else if (row.certified_exact) {
        verdict = "exact";
      } else {
        verdict = "bound holds";
      }
      rows.push_back({row.name, std::to_string(row.n), std::to_string(row.m),
                      std::to_string(row.chi), std::to_string(row.bound),
                      std::to_string(row.exhausted_below),
                      std::to_string(row.best_cover_size), verdict});
    }
  }
  std::ostringstream out;
  out << "chordal covers of line graphs vs the coloring lower bound\n"
      << config_to_text(c) << "\n\n";
  out << table_text({"graph", "n", "m", "chi", "bound", "exhausted", "best", "verdict"},
                    rows);
  out << "\nviolation found: " << (r.violation ? "YES" : "no") << "\n";
  return out.str();
}

std::string report_to_text(const TrendReport& r, const RunConfig& c) {
  std::vector<std::vector<std::string>> rows;
  for (const TrendRow& row : r.rows) {
    if (row.skipped) {
      rows.push_back({std::to_string(row.k), "-", "-", "-", "-", "-",
                      "skipped: " + row.skip_reason});
    } else {
      rows.push_back({std::to_string(row.k), std::to_string(row.n),
                      std::to_string(row.m), std::to_string(row.chi),
                      std::to_string(row.bound), std::to_string(row.cover_size),
                      row.cover_verified ? "verified" : "FAILED"});
    }
  }
  std::ostringstream out;
  out << "triangle-free iterates: lower bound vs constructed cover\n"
      << config_to_text(c) << "\n\n";
  out << table_text({"k", "n", "m", "chi", "bound", "cover", "verdict"}, rows);
  out << "\nbounds nondecreasing: " << (r.bounds_nondecreasing ? "yes" : "NO")
      << "\nbounds within covers: " << (r.bounds_within_cover ? "yes" : "NO") << "\n";
  return out.str();
}

std::string verdict_to_text(const VerifyVerdict& v) {
  std::ostringstream out;
  out << v.doc_type << ": " << (v.pass ? "PASS" : "FAIL") << "\n"
      << v.details.dump(2) << "\n";
  return out.str();
}

}  // namespace linecover
