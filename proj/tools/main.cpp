#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zgraph/constructions.hpp"
#include "zgraph/graph.hpp"
#include "zgraph/io.hpp"
#include "zgraph/verifier.hpp"
#include "zgraph/zgen.hpp"

namespace {

using namespace zgraph;

struct CommonOptions {
  GroupOptions group;
  StructureOptions structure;
  ZGenOptions zgen;
};

GroupFileFormat format_from_string(const std::string& s) {
  if (s == "auto") return GroupFileFormat::auto_detect;
  if (s == "cayley") return GroupFileFormat::cayley;
  if (s == "perm" || s == "permutations") return GroupFileFormat::permutations;
  if (s == "zparams") return GroupFileFormat::zparams;
  throw CLI::ValidationError("--format", "unknown format '" + s + "'");
}

void print_metrics(std::ostream& os, const char* label, const GraphMetrics& m) {
  os << label << ": " << m.vertices << " vertices, " << m.edges << " edges, "
     << m.components << (m.components == 1 ? " component" : " components")
     << ", diameter " << m.diam.str() << ", " << m.dominating
     << " dominating\n";
}

int run_analyze(const std::string& in, const std::string& format,
                bool as_json, const CommonOptions& common,
                const VerifyConfig& cfg) {
  const ParsedGroup parsed =
      parse_group_file(in, format_from_string(format), common.group);
  const GroupReport report = analyze(parsed.group, cfg, parsed.source_kind);
  if (as_json) {
    std::cout << report_json_line(report) << "\n";
  } else {
    std::cout << "group: " << report.name << " (order " << report.order
              << ", source " << report.source << ")\n";
    std::cout << "flags: z_group=" << (report.is_z_group ? "yes" : "no")
              << " frobenius=" << (report.is_frobenius ? "yes" : "no")
              << " nilpotent=" << (report.is_nilpotent ? "yes" : "no")
              << " solvable=" << (report.is_solvable ? "yes" : "no")
              << " center=" << report.center_order
              << " derived=" << report.derived_order << "\n";
    print_metrics(std::cout, "cyclic graph", report.cyclic);
    if (report.commuting)
      print_metrics(std::cout, "commuting graph", *report.commuting);
    else
      std::cout << "commuting graph: not defined (abelian group)\n";
    print_metrics(std::cout, "enhanced power graph", report.enhanced);
    std::cout << "theorems:";
    for (const TheoremCheck& t : report.theorems) {
      std::cout << " " << theorem_name(t.id) << "="
                << (!t.applicable ? "n/a" : t.passed ? "pass" : "FAIL");
    }
    std::cout << "\n";
    for (const TheoremCheck& t : report.theorems)
      if (t.applicable && !t.passed)
        std::cout << "  " << theorem_name(t.id) << " witness: " << t.witness
                  << "\n";
  }
  return report.failed_checks() == 0 ? 0 : 1;
}

int run_generate(std::int64_t lo, std::int64_t hi,
                 const CommonOptions& common) {
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (n > common.zgen.order_cap)
      throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(common.zgen.order_cap));
    for (const ZParams& params : enumerate_z_params(n)) {
      const FiniteGroup g = realize(params);
      const Graph delta = cyclic_graph(g);
      const ElemSet z = center(g);
      const FrobeniusResult frob = is_frobenius(g, common.structure);
      std::cout << params.str() << "  order=" << g.order()
                << "  name=" << g.name() << "  center=" << z.size()
                << "  frobenius=" << (frob.is_frobenius ? "yes" : "no")
                << "  delta_diam=" << diameter(delta).str() << "\n";
    }
  }
  return 0;
}

int run_verify(int min_order, int max_order, bool extras,
               const std::string& report_path, const VerifyConfig& cfg) {
  const std::vector<GroupSource> corpus =
      default_corpus(min_order, max_order, extras);
  std::string description = "z-groups " + std::to_string(min_order) + ".." +
                            std::to_string(max_order) +
                            (extras ? " + extras" : "");
  std::vector<GroupReport> reports;
  const SuiteReport suite = run_suite(corpus, cfg, &reports, description);

  std::cout << "corpus: " << suite.corpus_description << " ("
            << suite.group_count << " groups)\n";
  std::cout << "theorem  applicable  passed  failed\n";
  for (const auto& [name, totals] : suite.per_theorem) {
    std::string a = std::to_string(totals.applicable);
    std::string p = std::to_string(totals.passed);
    std::string f = std::to_string(totals.failed);
    std::cout << name << std::string(9 - std::string(name).size(), ' ')
              << std::string(10 - a.size(), ' ') << a
              << std::string(8 - p.size(), ' ') << p
              << std::string(8 - f.size(), ' ') << f << "\n";
  }
  for (const SuiteFailure& f : suite.failures)
    std::cout << "FAIL " << f.group << " [" << f.theorem << "] " << f.witness
              << "\n";
  std::cout << "verify: " << suite.group_count << " groups, "
            << suite.failed_total() << " failures\n";
  std::cerr << "elapsed: " << suite.duration_seconds << " s\n";

  if (!report_path.empty()) {
    std::ofstream os(report_path);
    if (!os) throw IoError("cannot open " + report_path + " for writing");
    write_suite_report(os, reports, suite);
  }
  return suite.failed_total() == 0 ? 0 : 1;
}

int run_export(const std::string& in, const std::string& in_format,
               const std::string& graph_kind, const std::string& out_format,
               const std::string& out, const CommonOptions& common) {
  const ParsedGroup parsed =
      parse_group_file(in, format_from_string(in_format), common.group);
  Graph graph;
  if (graph_kind == "cyclic") {
    graph = cyclic_graph(parsed.group);
  } else if (graph_kind == "commuting") {
    graph = commuting_graph(parsed.group);
  } else if (graph_kind == "enhanced" || graph_kind == "enhanced_power") {
    graph = enhanced_power_graph(parsed.group);
  } else {
    throw CLI::ValidationError("--graph", "unknown graph '" + graph_kind + "'");
  }
  if (out_format == "dot") {
    export_dot(graph, std::filesystem::path(out));
  } else if (out_format == "edges" || out_format == "edgelist") {
    export_edge_list(graph, std::filesystem::path(out));
  } else {
    throw CLI::ValidationError("--format",
                               "unknown format '" + out_format + "'");
  }
  std::cerr << "wrote " << to_string(graph.kind()) << " graph of "
            << parsed.group.name() << " (" << graph.vertex_count()
            << " vertices, " << graph.edge_count() << " edges) to " << out
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group cyclic/commuting/enhanced-power graph analysis"};
  app.require_subcommand(1);

  CommonOptions common;
  VerifyConfig cfg;
  app.add_option("--assoc-bound", common.group.assoc_full_bound,
                 "full associativity scan up to this order");
  app.add_option("--closure-cap", common.group.closure_cap,
                 "permutation closure cap");
  app.add_option("--lattice-cap", common.structure.lattice_cap,
                 "subgroup lattice cap");
  app.add_option("--frobenius-oracle-cap",
                 common.structure.frobenius_oracle_cap,
                 "brute-force Frobenius oracle order cap");
  app.add_option("--order-cap", common.zgen.order_cap,
                 "largest order accepted by the Z-group generator");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one group file");
  std::string in, format = "auto";
  bool as_json = false;
  analyze_cmd->add_option("--in", in, "group file")->required();
  analyze_cmd->add_option("--format", format,
                          "auto|cayley|perm|zparams (default: auto)");
  analyze_cmd->add_flag("--json", as_json, "print the report record as JSON");

  auto* generate_cmd =
      app.add_subcommand("generate", "list Z-groups of an order (range)");
  std::int64_t order = 0, min_order_g = 0, max_order_g = 0;
  generate_cmd->add_option("--order", order, "single order");
  generate_cmd->add_option("--min-order", min_order_g, "range start");
  generate_cmd->add_option("--max-order", max_order_g, "range end");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the theorem suite over a corpus");
  int min_order = 2, max_order = 300;
  bool no_extras = false;
  std::string report_path;
  verify_cmd->add_option("--min-order", min_order, "smallest Z-group order");
  verify_cmd->add_option("--max-order", max_order, "largest Z-group order");
  verify_cmd->add_option("--jobs", cfg.jobs, "concurrent group analyses");
  verify_cmd->add_flag("--exhaustive-covariance", cfg.exhaustive_covariance,
                       "check conjugation covariance on all triples");
  verify_cmd->add_flag("--no-extras", no_extras,
                       "Z-groups only, skip the constructor/permutation extras");
  verify_cmd->add_flag("--negative-control", cfg.negative_control,
                       "flip one cyclic-graph edge per group; the suite must "
                       "then report failures");
  verify_cmd->add_option("--report", report_path,
                         "write line-delimited JSON records here");

  auto* export_cmd = app.add_subcommand("export", "write a graph file");
  std::string graph_kind = "cyclic", out_format = "dot", in_format = "auto", out;
  export_cmd->add_option("--in", in, "group file")->required();
  export_cmd->add_option("--in-format", in_format,
                         "auto|cayley|perm|zparams (default: auto)");
  export_cmd->add_option("--graph", graph_kind,
                         "cyclic|commuting|enhanced (default: cyclic)");
  export_cmd->add_option("--format", out_format, "dot|edges (default: dot)");
  export_cmd->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.group = common.group;
  cfg.structure = common.structure;

  try {
    if (*analyze_cmd) return run_analyze(in, format, as_json, common, cfg);
    if (*generate_cmd) {
      if (order > 0) min_order_g = max_order_g = order;
      if (min_order_g < 1 || max_order_g < min_order_g) {
        std::cerr << "generate: give --order N or --min-order/--max-order\n";
        return 2;
      }
      return run_generate(min_order_g, max_order_g, common);
    }
    if (*verify_cmd)
      return run_verify(min_order, max_order, !no_extras, report_path, cfg);
    if (*export_cmd)
      return run_export(in, in_format, graph_kind, out_format, out, common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
