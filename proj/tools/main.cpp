// Command line front end. Exit codes: 0 pass, 1 verification failure,
// 2 budget or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "linecover/errors.hpp"
#include "linecover/json_io.hpp"
#include "linecover/reports.hpp"
#include "linecover/transforms.hpp"
#include "linecover/version.hpp"

namespace {

using linecover::RunConfig;

struct CliState {
  RunConfig config;
  std::string format = "json";
  std::string out_path;
  std::string spec;
  std::string in_path;
  std::string specs = "complete:3,complete:4,complete:5,cycle:4,cycle:5,path:3,path:6,matching:2";
  std::string cor3_specs = "path:3,cycle:5,mycielski:4";
  std::vector<int> ns = {3, 4, 8, 16};
  int trend_from = 2;
  int trend_to = 5;
};

void emit(const CliState& st, const std::string& content) {
  if (st.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(st.out_path);
  if (!out) throw linecover::ParseError("cannot open '" + st.out_path + "' for writing");
  out << content;
}

void emit_json(const CliState& st, const nlohmann::json& j) {
  emit(st, j.dump(2) + "\n");
}

// graph input: exactly one of --spec / --in
linecover::NamedGraph load_graph(const CliState& st) {
  if (st.spec.empty() == st.in_path.empty()) {
    throw linecover::ParseError("give exactly one of --spec or --in");
  }
  if (!st.spec.empty()) return linecover::parse_graph_spec(st.spec, st.config.seed);
  nlohmann::json doc = linecover::load_json_file(st.in_path);
  return {st.in_path, linecover::graph_from_json(doc)};
}

int cmd_gen(const CliState& st) {
  linecover::NamedGraph ng = linecover::parse_graph_spec(st.spec, st.config.seed);
  if (st.format == "json") {
    emit_json(st, linecover::graph_to_json(ng.graph));
  } else {
    emit(st, linecover::to_dot(ng.graph));
  }
  return 0;
}

int cmd_linegraph(const CliState& st) {
  linecover::NamedGraph ng = load_graph(st);
  linecover::LineGraphMap lg = linecover::line_graph(ng.graph);
  if (st.format == "json") {
    emit_json(st, nlohmann::json{{"base", linecover::graph_to_json(lg.base)},
                                 {"line", linecover::graph_to_json(lg.line)}});
  } else {
    emit(st, linecover::to_dot(lg.line, "linegraph"));
  }
  return 0;
}

int cmd_cover_build(const CliState& st) {
  linecover::NamedGraph ng = load_graph(st);
  linecover::PipelineResult pr =
      linecover::build_equivalence_cover_pipeline(ng.graph, st.config.budget_vertices);
  linecover::CoverReport check = linecover::cover_verify(pr.cover);
  if (!check.pass()) {
    std::cerr << "constructed cover failed verification\n";
    return 1;
  }
  if (st.format == "json") {
    emit_json(st, linecover::cover_to_json(pr.cover));
  } else {
    std::ostringstream out;
    out << "graph " << ng.name << ": n " << ng.graph.vertex_count() << ", m "
        << ng.graph.edge_count() << "\n"
        << "palette " << pr.coloring.num_colors
        << (pr.coloring_exact ? " (exact)" : " (greedy)") << ", order family size "
        << pr.family.orders.size() << "\n"
        << "equivalence cover of the line graph: " << pr.cover.members.size()
        << " members, verified\n";
    emit(st, out.str());
  }
  return 0;
}

int cmd_cover_verify(const CliState& st) {
  if (st.in_path.empty()) throw linecover::ParseError("--in is required");
  nlohmann::json doc = linecover::load_json_file(st.in_path);
  linecover::VerifyVerdict verdict = linecover::run_verify(doc);
  if (st.format == "json") {
    emit_json(st, linecover::verdict_to_json(verdict));
  } else {
    emit(st, linecover::verdict_to_text(verdict));
  }
  return verdict.pass ? 0 : 1;
}

int cmd_elb_exact(const CliState& st) {
  linecover::NamedGraph ng = load_graph(st);
  std::optional<int> elb =
      linecover::exact_elb(ng.graph, st.config.k_max, st.config.budget_edges);
  std::optional<int> inelb =
      linecover::exact_inelb(ng.graph, st.config.k_max, st.config.budget_edges);
  if (st.format == "json") {
    nlohmann::json j{{"version", linecover::kVersion},
                     {"seed", st.config.seed},
                     {"budgets", {{"vertices", st.config.budget_vertices},
                                  {"edges", st.config.budget_edges},
                                  {"k_max", st.config.k_max}}},
                     {"graph", ng.name},
                     {"n", ng.graph.vertex_count()},
                     {"m", ng.graph.edge_count()},
                     {"elb", nullptr},
                     {"inelb", nullptr}};
    if (elb) j["elb"] = *elb;
    if (inelb) j["inelb"] = *inelb;
    emit_json(st, j);
  } else {
    std::ostringstream out;
    out << "graph " << ng.name << ": n " << ng.graph.vertex_count() << ", m "
        << ng.graph.edge_count() << "\n";
    out << "elb: " << (elb ? std::to_string(*elb) : "above k_max") << "\n";
    out << "inelb: " << (inelb ? std::to_string(*inelb) : "above k_max") << "\n";
    emit(st, out.str());
  }
  return 0;
}

template <typename Report>
int emit_report(const CliState& st, const Report& rep, bool pass) {
  if (st.format == "json") {
    emit_json(st, linecover::report_to_json(rep, st.config));
  } else {
    emit(st, linecover::report_to_text(rep, st.config));
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CliState st;
  CLI::App app{std::string("line graph covering toolkit ") + linecover::kVersion};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", st.config.seed, "seed for randomized pieces");
  app.add_option("--budget-vertices", st.config.budget_vertices,
                 "exact coloring vertex budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-edges", st.config.budget_edges,
                 "exact elbow solver edge budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--kmax", st.config.k_max, "exact elbow solver family size cap")
      ->check(CLI::Range(0, 4));
  app.add_option("--format", st.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", st.out_path, "write output to this path instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "emit a generated graph (json or dot)");
  gen->add_option("--spec", st.spec, "generator spec, e.g. complete:4 or random:10:0.3")
      ->required();

  CLI::App* lgc = app.add_subcommand("linegraph", "emit the line graph of a graph");
  lgc->add_option("--spec", st.spec, "generator spec");
  lgc->add_option("--in", st.in_path, "graph json path");

  CLI::App* build = app.add_subcommand(
      "cover-build", "build a verified equivalence cover of the line graph");
  build->add_option("--spec", st.spec, "generator spec");
  build->add_option("--in", st.in_path, "graph json path");

  CLI::App* verify = app.add_subcommand(
      "cover-verify", "verify a cover / orientation family / order family document");
  verify->add_option("--in", st.in_path, "document json path")->required();

  CLI::App* elb = app.add_subcommand(
      "elb-exact", "exhaustive minimum elbow and in-elbow cover sizes");
  elb->add_option("--spec", st.spec, "generator spec");
  elb->add_option("--in", st.in_path, "graph json path");

  CLI::App* th1 = app.add_subcommand(
      "report-theorem1", "exact elbow cover size vs the closed-form value");
  th1->add_option("--specs", st.specs, "comma separated generator specs");

  CLI::App* kn = app.add_subcommand(
      "report-kn", "equivalence covers of line graphs of complete graphs");
  kn->add_option("--ns", st.ns, "n values")->delimiter(',');

  CLI::App* cor3 = app.add_subcommand(
      "report-cor3", "chordal covers of line graphs vs the coloring lower bound");
  cor3->add_option("--specs", st.cor3_specs, "comma separated triangle-free specs");

  CLI::App* trend = app.add_subcommand(
      "report-trend", "lower bound trend along triangle-free iterates");
  trend->add_option("--from", st.trend_from, "first iterate");
  trend->add_option("--to", st.trend_to, "last iterate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(st);
    if (lgc->parsed()) return cmd_linegraph(st);
    if (build->parsed()) return cmd_cover_build(st);
    if (verify->parsed()) return cmd_cover_verify(st);
    if (elb->parsed()) return cmd_elb_exact(st);
    if (th1->parsed()) {
      auto graphs = linecover::parse_graph_specs(st.specs, st.config.seed);
      auto rep = linecover::run_formula_table(graphs, st.config);
      return emit_report(st, rep, rep.all_match);
    }
    if (kn->parsed()) {
      auto rep = linecover::run_kn_report(st.ns, st.config);
      return emit_report(st, rep, rep.all_verified);
    }
    if (cor3->parsed()) {
      auto graphs = linecover::parse_graph_specs(st.cor3_specs, st.config.seed);
      auto rep = linecover::run_lower_bound_check(graphs, st.config);
      return emit_report(st, rep, !rep.violation);
    }
    if (trend->parsed()) {
      auto rep = linecover::run_trend_report(st.trend_from, st.trend_to, st.config);
      return emit_report(st, rep, rep.bounds_nondecreasing && rep.bounds_within_cover);
    }
  } catch (const linecover::ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const linecover::BudgetExceeded& ex) {
    std::cerr << "budget error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "failure: " << ex.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
