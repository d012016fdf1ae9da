#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permgraph/analysis.hpp"
#include "permgraph/harness.hpp"
#include "permgraph/perm_graph.hpp"
#include "permgraph/subgroup.hpp"

using namespace permgraph;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool complete_on(const Graph& g, std::size_t r) {
  return g.vertex_count() == r && g.edge_count() == r * (r - 1) / 2;
}

const AnalyzedCorpus& corpus200() {
  static const AnalyzedCorpus ac = analyze_corpus(build_corpus(200), 1);
  return ac;
}

bool graph_is(const GroupProfile& p, const std::string& name) {
  return p.defined && is_isomorphic(p.graph->adjacency, make_named(name));
}

std::string counted(std::size_t checked, std::size_t bad, const char* what) {
  return std::to_string(checked) + " " + what + ", " + std::to_string(bad) + " disagreements";
}

Outcome from_report(const TheoremReport& r) {
  std::string detail = std::to_string(r.verdicts.size()) + " groups, " + std::to_string(r.counterexamples.size()) +
                       " counterexamples";
  if (!r.counterexamples.empty()) detail += " (first: " + r.counterexamples.front().group + ")";
  return {r.passed(), detail};
}

Outcome cyclic_completeness() {
  std::size_t checked = 0, bad = 0;
  for (long long n = 4; n <= 500; ++n) {
    if (is_prime(n)) continue;
    const std::size_t r = oracle::divisor_count(n) - 2;
    const Graph g = build_gamma_c(make_cyclic(n)).adjacency;
    ++checked;
    if (!complete_on(g, r) || !is_isomorphic(g, make_named("K" + std::to_string(r)))) ++bad;
  }
  return {bad == 0, counted(checked, bad, "orders")};
}

Outcome elementary_abelian() {
  std::size_t bad = 0;
  for (long long p : {2, 3, 5, 7, 11}) {
    const Graph g = build_gamma_c(make_direct_product(make_cyclic(p), make_cyclic(p))).adjacency;
    if (!complete_on(g, p + 1) || !is_isomorphic(g, make_named("K" + std::to_string(p + 1)))) ++bad;
  }
  return {bad == 0, counted(5, bad, "primes")};
}

Outcome quaternion() {
  const GroupTable q8 = make_generalized_quaternion(8);
  const bool k4 = is_isomorphic(build_gamma_c(q8).adjacency, make_named("K4"));
  const auto& ac = corpus200();
  std::size_t with_k4 = 0, not_q8 = 0;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    if (e.is_abelian || !graph_is(ac.profiles[i], "K4")) continue;
    ++with_k4;
    if (!oracle::isomorphic_groups(*e.table, q8)) ++not_q8;
  }
  return {k4 && with_k4 >= 1 && not_q8 == 0,
          "Q8 -> K4: " + std::string(k4 ? "yes" : "no") + "; non-abelian corpus groups with K4: " +
              std::to_string(with_k4) + ", not isomorphic to Q8: " + std::to_string(not_q8)};
}

Outcome frobenius_stars() {
  std::size_t bad = 0;
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 3}, {2, 5}, {2, 7}, {3, 7}, {2, 11}, {5, 11}}) {
    const Graph g = build_gamma_c(make_metacyclic_semidirect(q, p, 1, 1)).adjacency;
    if (!is_isomorphic(g, make_named("K1," + std::to_string(q)))) ++bad;
  }
  return {bad == 0, counted(6, bad, "(p, q) pairs")};
}

Outcome alternating() {
  const GroupTable a4 = make_alternating(4);
  const bool shape = is_isomorphic(build_gamma_c(a4).adjacency, make_named("K3+4K1"));
  const auto& ac = corpus200();
  std::size_t matches = 0, not_a4 = 0;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    if (!graph_is(ac.profiles[i], "K3+4K1")) continue;
    ++matches;
    if (!are_isomorphic_groups(*ac.corpus.entries[i].table, a4)) ++not_a4;
  }
  return {shape && matches >= 1 && not_a4 == 0,
          "A4 -> K3+4K1: " + std::string(shape ? "yes" : "no") + "; corpus groups with this graph: " +
              std::to_string(matches) + ", not isomorphic to A4: " + std::to_string(not_a4)};
}

Outcome main_theorem() { return from_report(verify_main_theorem(corpus200())); }

Outcome corollary() {
  const auto& ac = corpus200();
  Outcome o = from_report(verify_corollary_equivalences(ac));
  std::size_t bad_girth = 0;
  for (const auto& p : ac.profiles)
    if (p.defined && !p.report.girth.is_infinite() && p.report.girth.value() != 3) ++bad_girth;
  o.pass = o.pass && bad_girth == 0;
  o.detail += ", girth outside {3, inf}: " + std::to_string(bad_girth);
  return o;
}

Outcome totally_disconnected() { return from_report(verify_totally_disconnected(corpus200())); }

Outcome universal_vertex() {
  const auto& ac = corpus200();
  std::size_t checked = 0, with_universal = 0, bad = 0;
  for (const auto& p : ac.profiles) {
    if (!p.defined) continue;
    ++checked;
    const Graph& g = p.graph->adjacency;
    if (universal_vertices(g).empty()) continue;
    ++with_universal;
    const auto m = oracle::matrix(g);
    if (!oracle::connected(m) || diameter(g).is_infinite() || diameter(g).value() > 2) ++bad;
    if (p.report.regular && !complete_on(g, g.vertex_count())) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " graphs, " + std::to_string(with_universal) +
                        " with a universal vertex, " + std::to_string(bad) + " counterexamples"};
}

Outcome planar_abelian() {
  const auto& ac = corpus200();
  std::size_t checked = 0, bad = 0;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!e.is_abelian || !p.defined) continue;
    const auto& t = p.types;
    const int a = t.cyclic_prime_power;
    const bool listed = (a >= 2 && a <= 5) || t.cyclic_pq || t.cyclic_p2q || t.elementary_rank2 == 2 ||
                        t.elementary_rank2 == 3;
    ++checked;
    if (is_planar(p.graph->adjacency) != listed) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " abelian classes, " + std::to_string(bad) + " counterexamples"};
}

Outcome oracle_agreement() {
  const auto& ac = corpus200();
  std::size_t pairs = 0, bad = 0;
  for (const auto& e : ac.corpus.entries) {
    if (e.table->order() > 48) continue;
    const GroupTable& g = *e.table;
    const auto subs = cyclic_subgroups(g).all;
    std::vector<oracle::Set> sets;
    for (const auto& h : subs) {
      const auto v = h.elements().to_vector();
      sets.emplace_back(v.begin(), v.end());
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j) {
        ++pairs;
        const bool a = oracle::permute_by_equality(g, sets[i], sets[j]);
        const bool b = oracle::permute_by_closure(g, sets[i], sets[j]);
        const bool c = oracle::permute_by_size(g, sets[i], sets[j]);
        if (a != b || b != c || c != permutes(g, subs[i], subs[j])) ++bad;
      }
  }
  return {bad == 0, counted(pairs, bad, "subgroup pairs")};
}

Outcome graph_cross_checks() {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::size_t bad = 0, planar_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(rng, size(rng), 0.3);
    const auto m = oracle::matrix(g);
    const std::size_t cycle = oracle::girth(m);
    const Length expected = cycle == 0 ? Length::infinite() : Length::finite(cycle);
    if (girth(g) != expected) ++bad;
    const AnalysisReport r = analyze(g);
    if (r.tree != oracle::is_tree(m)) ++bad;
    if (g.vertex_count() <= 8) {
      ++planar_checked;
      if (is_planar(g) != oracle::planar(m)) ++bad;
    }
  }
  return {bad == 0, "1000 graphs (" + std::to_string(planar_checked) + " planarity checks), " +
                        std::to_string(bad) + " disagreements"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cyclic completeness", cyclic_completeness},
      {"elementary abelian", elementary_abelian},
      {"quaternion Q8", quaternion},
      {"Frobenius-type stars", frobenius_stars},
      {"alternating A4", alternating},
      {"main classification", main_theorem},
      {"corollary equivalences", corollary},
      {"totally disconnected", totally_disconnected},
      {"universal vertex", universal_vertex},
      {"planar abelian", planar_abelian},
      {"permutability oracles", oracle_agreement},
      {"graph algorithm cross-checks", graph_cross_checks},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
