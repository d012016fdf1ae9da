#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permgraph/analysis.hpp"
#include "permgraph/group.hpp"
#include "permgraph/perm_graph.hpp"

namespace permgraph {

// Largest order the harness builds a corpus for; larger requests are clamped
// and the clamp is noted in every report's scope.
inline constexpr std::size_t kHarnessOrderCeiling = 256;

inline const std::vector<std::string>& corpus_family_names() {
  static const std::vector<std::string> names{"abelian",   "dihedral",  "quaternion",  "modular",
                                              "semidirect", "symmetric", "alternating", "products"};
  return names;
}

struct CorpusConfig {
  // Subset of corpus_family_names(); empty selects every family.
  std::set<std::string> families;
  long long max_perm_degree = 5;
  // Non-abelian groups of at most this order are multiplied by cyclic groups
  // in the "products" family, up to `product_max_order`.
  std::size_t product_base_max_order = 12;
  std::size_t product_max_order = 96;
};

struct CorpusEntry {
  GroupSpec spec;
  std::shared_ptr<const GroupTable> table;
  std::string family;
  bool is_abelian = false;
  bool is_cyclic = false;
  std::vector<std::pair<long long, int>> factorization;
};

struct Corpus {
  std::size_t max_order = 0;
  std::string scope;
  std::vector<CorpusEntry> entries;
};

// Deterministic corpus: one group per abelian isomorphism class of order
// 2..max_order (invariant-factor specs), plus every family instance in range.
// Entries are ordered by group order, then by construction.
Corpus build_corpus(std::size_t max_order, const CorpusConfig& config = {});

// Isomorphism types the classification statements mention.
struct TypeFlags {
  int cyclic_prime_power = 0;  // alpha when G = Z_{p^alpha}
  bool cyclic_pq = false;
  bool cyclic_p2q = false;
  long long elementary_rank2 = 0;  // p when G = Z_p x Z_p
  bool quaternion8 = false;
  bool nonabelian_pq = false;  // Z_q x| Z_p
  bool symmetric3 = false;
  bool alternating4 = false;
};

TypeFlags classify_group(const GroupTable& g);

struct GroupProfile {
  bool defined = false;
  std::optional<PermGraph> graph;
  AnalysisReport report;
  TypeFlags types;
  bool has_universal_vertex = false;
  bool claw_subgraph = false;
  bool path2_subgraph = false;
};

struct AnalyzedCorpus {
  Corpus corpus;
  std::vector<GroupProfile> profiles;
};

// Builds every graph and report; `threads` workers pull entries from a shared
// queue and results are stored by corpus index.
AnalyzedCorpus analyze_corpus(Corpus corpus, std::size_t threads = 1);

struct Verdict {
  std::size_t index = 0;
  std::string group;
  bool pass = true;
  std::string detail;
};

struct Counterexample {
  std::string group;
  std::string reason;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::string scope;
  std::vector<Verdict> verdicts;
  std::vector<Counterexample> counterexamples;
  // Informational observations; never failures.
  std::vector<std::string> findings;
  double duration_ms = 0.0;

  bool passed() const noexcept { return counterexamples.empty(); }
};

TheoremReport verify_cyclic_complete(const AnalyzedCorpus& ac);
TheoremReport verify_abelian_classification(const AnalyzedCorpus& ac);
TheoremReport verify_main_theorem(const AnalyzedCorpus& ac);
TheoremReport verify_corollary_equivalences(const AnalyzedCorpus& ac);
TheoremReport verify_totally_disconnected(const AnalyzedCorpus& ac);
TheoremReport verify_universal_vertex_and_planarity(const AnalyzedCorpus& ac);
TheoremReport verify_characterizations(const AnalyzedCorpus& ac);
TheoremReport verify_nonabelian_props(const AnalyzedCorpus& ac);

std::vector<TheoremReport> run_all_verifiers(const AnalyzedCorpus& ac);

// JSON array of reports. Durations are omitted unless requested so that
// repeated runs are byte-identical.
std::string to_json(const std::vector<TheoremReport>& reports, bool include_timings = false);

}  // namespace permgraph
