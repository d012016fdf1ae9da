#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgraph/analysis.hpp"
#include "permgraph/error.hpp"
#include "permgraph/harness.hpp"
#include "permgraph/perm_graph.hpp"
#include "permgraph/subgroup.hpp"

namespace {

using namespace permgraph;

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2, kUndefined = 3 };

struct CliConfig {
  std::string spec;
  bool json = false;
  bool dot = false;
  std::string output;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t verify_max_order = 200;
  std::string families;
  std::string report;
  std::size_t threads = 0;
  bool timings = false;
  int verbosity = 0;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_parameter, "cannot open '" + cfg.output + "' for writing");
  out << text;
}

int cmd_group_info(const CliConfig& cfg) {
  const GroupTable g = build_group(parse_group_spec(cfg.spec), cfg.max_order);
  const CyclicCatalog catalog = cyclic_subgroups(g);
  const bool defined = !catalog.proper.empty();
  nlohmann::ordered_json j;
  j["group"] = g.spec_string();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["cyclic"] = g.is_cyclic();
  j["cyclic_subgroups"] = catalog.all.size();
  j["proper_cyclic_subgroups"] = catalog.proper.size();
  j["gamma_c_defined"] = defined;
  if (cfg.json) {
    emit(cfg, j.dump() + "\n");
  } else {
    std::ostringstream out;
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    emit(cfg, out.str());
  }
  if (!defined) {
    std::cerr << "permgraph: Gamma_c undefined: group " << g.spec_string()
              << " has no proper nontrivial cyclic subgroup\n";
    return kUndefined;
  }
  return kOk;
}

int cmd_graph(const CliConfig& cfg) {
  if (cfg.json && cfg.dot) throw Error(ErrorKind::invalid_parameter, "choose one of --dot and --json");
  const GroupTable g = build_group(parse_group_spec(cfg.spec), cfg.max_order);
  const PermGraph gr = build_gamma_c(g);
  emit(cfg, cfg.json ? to_json(gr) : to_dot(gr));
  return kOk;
}

int cmd_analyze(const CliConfig& cfg) {
  const GroupTable g = build_group(parse_group_spec(cfg.spec), cfg.max_order);
  const AnalysisReport report = analyze(build_gamma_c(g));
  emit(cfg, cfg.json ? to_json(report) : to_text(report));
  return kOk;
}

std::size_t resolve_threads(std::size_t requested) {
  if (const char* env = std::getenv("PERMGRAPH_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_parameter, std::string("invalid PERMGRAPH_THREADS '") + env + "'");
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const CliConfig& cfg) {
  CorpusConfig corpus_cfg;
  std::stringstream list(cfg.families);
  for (std::string name; std::getline(list, name, ',');)
    if (!name.empty()) corpus_cfg.families.insert(name);
  const std::size_t threads = resolve_threads(cfg.threads);

  Corpus corpus = build_corpus(cfg.verify_max_order, corpus_cfg);
  const std::string scope = corpus.scope;
  if (cfg.verbosity > 0) std::cerr << "permgraph: analyzing " << corpus.entries.size() << " groups\n";
  const AnalyzedCorpus ac = analyze_corpus(std::move(corpus), threads);
  const auto reports = run_all_verifiers(ac);

  std::ostringstream out;
  out << "scope: " << scope << "\n";
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.verdicts.size() << " checked, "
        << r.counterexamples.size() << " counterexamples)\n";
    for (const auto& c : r.counterexamples) out << "  counterexample " << c.group << ": " << c.reason << "\n";
    if (cfg.verbosity > 0)
      for (const auto& f : r.findings) out << "  finding: " << f << "\n";
  }
  std::cout << out.str();
  if (!cfg.report.empty()) {
    std::ofstream file(cfg.report, std::ios::binary);
    if (!file) throw Error(ErrorKind::invalid_parameter, "cannot open '" + cfg.report + "' for writing");
    file << to_json(reports, cfg.timings);
  }
  return ok ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutability graphs of cyclic subgroups of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", cfg.spec, "Group spec, e.g. \"Q 8\" or \"Z 4 x Z 2\"")->required();
    sub->add_option("--max-order", cfg.max_order, "Refuse groups larger than this")
        ->check(CLI::Range(std::size_t{1}, kHardMaxOrder));
    sub->add_option("-o,--output", cfg.output, "Write to a file instead of stdout");
  };

  auto* info = app.add_subcommand("group-info", "Summarize a group");
  add_spec(info);
  info->add_flag("--json", cfg.json, "JSON output");

  auto* graph = app.add_subcommand("graph", "Export the permutability graph");
  add_spec(graph);
  graph->add_flag("--dot", cfg.dot, "DOT output (default)");
  graph->add_flag("--json", cfg.json, "JSON output");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report graph properties");
  add_spec(analyze_cmd);
  analyze_cmd->add_flag("--json", cfg.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check the classification statements over a group corpus");
  verify->add_option("--max-order", cfg.verify_max_order, "Largest corpus group order")
      ->check(CLI::Range(std::size_t{1}, kHardMaxOrder));
  verify->add_option("--families", cfg.families, "Comma-separated corpus families");
  verify->add_option("--report", cfg.report, "Write the JSON report here");
  verify->add_option("--threads", cfg.threads, "Worker threads (PERMGRAPH_THREADS overrides)");
  verify->add_flag("--timings", cfg.timings, "Include durations in the report");

  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_group_info(cfg);
    if (*graph) return cmd_graph(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "permgraph: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::undefined_graph ? kUndefined : kUsage;
  }
}
