#include "permgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "permgraph/error.hpp"

namespace permgraph {

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Partitions of e into non-increasing parts.
void partitions(int e, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(e - part, part, current, out);
    current.pop_back();
  }
}

// Invariant factors d_1 >= d_2 >= ... (d_{i+1} | d_i) of every abelian group
// of order n, one list per isomorphism class.
std::vector<std::vector<long long>> abelian_invariant_factors(long long n) {
  std::vector<std::vector<long long>> result{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    partitions(e, e, scratch, parts);
    std::vector<std::vector<long long>> next;
    for (const auto& base : result)
      for (const auto& part : parts) {
        std::vector<long long> merged = base;
        if (merged.size() < part.size()) merged.resize(part.size(), 1);
        for (std::size_t i = 0; i < part.size(); ++i) merged[i] *= ipow(p, part[i]);
        next.push_back(std::move(merged));
      }
    result = std::move(next);
  }
  return result;
}

bool selected(const CorpusConfig& config, const std::string& family) {
  return config.families.empty() || config.families.count(family) > 0;
}

std::string describe_families(const CorpusConfig& config) {
  std::string out;
  for (const auto& name : corpus_family_names())
    if (selected(config, name)) out += (out.empty() ? "" : ",") + name;
  return out;
}

const GroupTable& reference(const std::string& key) {
  static const GroupTable q8 = make_generalized_quaternion(8);
  static const GroupTable s3 = make_symmetric(3);
  static const GroupTable a4 = make_alternating(4);
  if (key == "Q8") return q8;
  if (key == "S3") return s3;
  return a4;
}

}  // namespace

// --- corpus ----------------------------------------------------------------

Corpus build_corpus(std::size_t max_order, const CorpusConfig& config) {
  for (const auto& f : config.families)
    if (std::find(corpus_family_names().begin(), corpus_family_names().end(), f) == corpus_family_names().end())
      throw Error(ErrorKind::invalid_parameter, "unknown corpus family '" + f + "'");

  Corpus corpus;
  const std::size_t requested = max_order;
  corpus.max_order = std::min(max_order, kHarnessOrderCeiling);
  const auto cap = static_cast<long long>(corpus.max_order);

  std::vector<std::pair<GroupSpec, std::string>> specs;
  if (selected(config, "abelian"))
    for (long long n = 2; n <= cap; ++n)
      for (const auto& factors : abelian_invariant_factors(n)) {
        std::vector<GroupSpec> parts;
        for (long long d : factors) parts.push_back(GroupSpec::cyclic(d));
        specs.emplace_back(parts.size() == 1 ? parts.front() : GroupSpec::product(std::move(parts)), "abelian");
      }
  if (selected(config, "dihedral"))
    for (long long n = 6; n <= cap; n += 2) specs.emplace_back(GroupSpec::dihedral(n), "dihedral");
  if (selected(config, "quaternion"))
    for (long long n = 8; n <= cap; n += 4) specs.emplace_back(GroupSpec::quaternion(n), "quaternion");
  if (selected(config, "modular"))
    for (long long p = 2; p * p * p <= cap; ++p) {
      if (!is_prime(p)) continue;
      for (int alpha = 3; ipow(p, alpha) <= cap; ++alpha) specs.emplace_back(GroupSpec::modular(p, alpha), "modular");
    }
  if (selected(config, "semidirect"))
    for (long long q = 3; q <= cap / 2; ++q) {
      if (!is_prime(q)) continue;
      for (long long p = 2; p < q; ++p) {
        if (!is_prime(p) || (q - 1) % p != 0) continue;
        for (int alpha = 1; q * ipow(p, alpha) <= cap; ++alpha)
          for (int t = 1; t <= alpha && (q - 1) % ipow(p, t) == 0; ++t)
            specs.emplace_back(GroupSpec::semidirect(q, p, alpha, t), "semidirect");
      }
    }
  long long factorial = 2;
  for (long long m = 3; m <= config.max_perm_degree; ++m) {
    factorial *= m;
    if (selected(config, "symmetric") && factorial <= cap) specs.emplace_back(GroupSpec::symmetric(m), "symmetric");
    if (selected(config, "alternating") && m >= 4 && factorial / 2 <= cap)
      specs.emplace_back(GroupSpec::alternating(m), "alternating");
  }
  if (selected(config, "products")) {
    const long long base_cap = static_cast<long long>(config.product_base_max_order);
    const long long prod_cap = std::min(cap, static_cast<long long>(config.product_max_order));
    std::vector<GroupSpec> bases;
    for (long long n = 6; n <= base_cap; n += 2) bases.push_back(GroupSpec::dihedral(n));
    for (long long n = 8; n <= base_cap; n += 4) bases.push_back(GroupSpec::quaternion(n));
    if (12 <= base_cap) bases.push_back(GroupSpec::alternating(4));
    for (const auto& base : bases) {
      const long long order = base.family == Family::alternating ? 12 : base.params[0];
      for (long long k = 2; order * k <= prod_cap; ++k)
        specs.emplace_back(GroupSpec::product({base, GroupSpec::cyclic(k)}), "products");
    }
  }

  for (auto& [spec, family] : specs) {
    CorpusEntry e;
    e.table = std::make_shared<const GroupTable>(build_group(spec, corpus.max_order));
    e.spec = std::move(spec);
    e.family = family;
    e.is_abelian = e.table->is_abelian();
    e.is_cyclic = e.table->is_cyclic();
    e.factorization = factorize(static_cast<long long>(e.table->order()));
    corpus.entries.push_back(std::move(e));
  }
  std::stable_sort(corpus.entries.begin(), corpus.entries.end(),
                   [](const CorpusEntry& a, const CorpusEntry& b) { return a.table->order() < b.table->order(); });

  std::ostringstream scope;
  scope << corpus.entries.size() << " groups of order <= " << corpus.max_order << " (families: "
        << describe_families(config) << "); 'only if' directions hold relative to this corpus";
  if (requested > corpus.max_order)
    scope << "; requested max order " << requested << " clamped to harness ceiling " << kHarnessOrderCeiling;
  corpus.scope = scope.str();
  return corpus;
}

TypeFlags classify_group(const GroupTable& g) {
  TypeFlags t;
  const auto n = static_cast<long long>(g.order());
  const auto f = factorize(n);
  const bool cyclic = g.is_cyclic();
  if (cyclic && f.size() == 1) t.cyclic_prime_power = f[0].second;
  if (cyclic && f.size() == 2 && f[0].second == 1 && f[1].second == 1) t.cyclic_pq = true;
  if (cyclic && f.size() == 2 && f[0].second + f[1].second == 3) t.cyclic_p2q = true;
  if (f.size() == 1 && f[0].second == 2 && !cyclic) {
    bool exponent_p = g.is_abelian();
    for (Element a = 1; a < g.order() && exponent_p; ++a) exponent_p = g.elem_order(a) == static_cast<std::size_t>(f[0].first);
    if (exponent_p) t.elementary_rank2 = f[0].first;
  }
  const bool abelian = g.is_abelian();
  if (!abelian && n == 8) t.quaternion8 = are_isomorphic_groups(g, reference("Q8"));
  if (!abelian && f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
    const long long p = f[0].first;
    const long long q = f[1].first;
    // Any non-abelian group of order pq forces p | q-1; compare with the model.
    t.nonabelian_pq = (q - 1) % p == 0 && are_isomorphic_groups(g, make_metacyclic_semidirect(q, p, 1, 1));
  }
  if (!abelian && n == 6) t.symmetric3 = are_isomorphic_groups(g, reference("S3"));
  if (!abelian && n == 12) t.alternating4 = are_isomorphic_groups(g, reference("A4"));
  return t;
}

AnalyzedCorpus analyze_corpus(Corpus corpus, std::size_t threads) {
  AnalyzedCorpus ac{std::move(corpus), {}};
  ac.profiles.resize(ac.corpus.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ac.corpus.entries.size(); i = next++) {
      const GroupTable& g = *ac.corpus.entries[i].table;
      GroupProfile& prof = ac.profiles[i];
      prof.types = classify_group(g);
      try {
        prof.graph = build_gamma_c(g);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::undefined_graph) throw;
        continue;
      }
      prof.defined = true;
      const Graph& gr = prof.graph->adjacency;
      prof.report = analyze(gr);
      prof.has_universal_vertex = !universal_vertices(gr).empty();
      prof.claw_subgraph = has_claw_subgraph(gr);
      prof.path2_subgraph = has_path2_subgraph(gr);
    }
  };
  threads = std::max<std::size_t>(threads, 1);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return ac;
}

// --- verifiers -------------------------------------------------------------

namespace {

struct Check {
  bool ok;
  std::string what;
};

Check holds(bool ok, std::string what) { return {ok, std::move(what)}; }

Check iff(const std::string& name, bool predicate, bool member) {
  std::string what = name + " (graph: " + (predicate ? "yes" : "no") + ", listed type: " + (member ? "yes" : "no") + ")";
  return {predicate == member, std::move(what)};
}

class Recorder {
 public:
  Recorder(const AnalyzedCorpus& ac, std::string id, std::string statement)
      : ac_(ac), start_(std::chrono::steady_clock::now()) {
    report_.id = std::move(id);
    report_.statement = std::move(statement);
    report_.scope = ac.corpus.scope;
  }

  void record(std::size_t index, const std::vector<Check>& checks) {
    Verdict v{index, format_group_spec(ac_.corpus.entries[index].spec), true, {}};
    std::string failed;
    for (const auto& c : checks) {
      if (c.ok) continue;
      v.pass = false;
      failed += (failed.empty() ? "" : "; ") + c.what;
    }
    v.detail = v.pass ? std::to_string(checks.size()) + " check(s) hold" : failed;
    if (!v.pass) report_.counterexamples.push_back({v.group, failed});
    report_.verdicts.push_back(std::move(v));
  }

  void finding(std::string text) { report_.findings.push_back(std::move(text)); }

  TheoremReport finish() {
    report_.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const AnalyzedCorpus& ac_;
  std::chrono::steady_clock::time_point start_;
  TheoremReport report_;
};

bool is_named(const GroupProfile& p, const std::string& name) {
  return find_isomorphism(p.graph->adjacency, make_named(name)).has_value();
}

bool path_positive(const AnalysisReport& r) { return r.path && *r.path >= 1; }

}  // namespace

TheoremReport verify_cyclic_complete(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "cyclic-complete",
               "For cyclic G of order n, Gamma_c(G) is the complete graph on tau(n)-2 vertices");
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!p.defined || !e.is_cyclic) continue;
    const long long r = tau(static_cast<long long>(e.table->order())) - 2;
    rec.record(i, {holds(is_named(p, "K" + std::to_string(r)), "graph is not K" + std::to_string(r))});
  }
  return rec.finish();
}

TheoremReport verify_abelian_classification(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "abelian-classification",
               "Finite abelian G: triangle-free iff Z_{p^2}, Z_{p^3}, Z_pq; bipartite iff triangle-free; "
               "C_n iff n=3 and Z_{p^4} or Z_2xZ_2; P_n iff n=1 and Z_{p^3} or Z_pq; K_4 iff Z_{p^5}, "
               "Z_{p^2q}, Z_3xZ_3; no K_{1,3} subgraph iff Z_{p^a} (a=2,3,4), Z_pq, Z_2xZ_2; unicyclic iff "
               "Z_{p^4} or Z_2xZ_2; Gamma_c(Z_pxZ_p) = K_{p+1}");
  std::size_t nonabelian_unicyclic = 0;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    const auto& r = p.report;
    const auto& t = p.types;
    if (!e.is_abelian) {
      if (r.unicyclic) {
        ++nonabelian_unicyclic;
        rec.finding("non-abelian " + format_group_spec(e.spec) + " has unicyclic Gamma_c");
      }
      continue;
    }
    const int a = t.cyclic_prime_power;
    std::vector<Check> checks{
        iff("triangle-free", r.triangle_free, a == 2 || a == 3 || t.cyclic_pq),
        holds(r.bipartite == r.triangle_free, "bipartite differs from triangle-free"),
        iff("cycle", r.cycle.has_value(), a == 4 || t.elementary_rank2 == 2),
        holds(!r.cycle || *r.cycle == 3, "cycle length is not 3"),
        iff("path P_n, n>=1", path_positive(r), a == 3 || t.cyclic_pq),
        holds(!path_positive(r) || *r.path == 1, "path length is not 1"),
        iff("K4", is_named(p, "K4"), a == 5 || t.cyclic_p2q || t.elementary_rank2 == 3),
        iff("no K_{1,3} subgraph", !p.claw_subgraph, a == 2 || a == 3 || a == 4 || t.cyclic_pq || t.elementary_rank2 == 2),
        iff("unicyclic", r.unicyclic, a == 4 || t.elementary_rank2 == 2),
    };
    if (t.elementary_rank2 != 0) {
      const std::string k = "K" + std::to_string(t.elementary_rank2 + 1);
      checks.push_back(holds(is_named(p, k), "Z_p x Z_p graph is not " + k));
    }
    rec.record(i, checks);
  }
  if (nonabelian_unicyclic == 0) rec.finding("no non-abelian corpus group has a unicyclic Gamma_c");
  return rec.finish();
}

TheoremReport verify_main_theorem(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "main-theorem",
               "Finite G: triangle-free iff Z_{p^2}, Z_{p^3}, Z_pq, Z_q x| Z_p; C_n iff n=3 and "
               "Z_{p^4} or Z_2xZ_2; P_n iff n=1 and Z_{p^3} or Z_pq; K_4 iff Z_{p^5}, Z_{p^2q}, "
               "Z_3xZ_3, Q_8; claw-free iff Z_{p^a} (a=2,3,4), Z_pq, Z_2xZ_2, A_4 (claw-free read as "
               "containing no K_{1,3} subgraph)");
  std::size_t induced_disagreements = 0;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    const auto& r = p.report;
    const auto& t = p.types;
    const int a = t.cyclic_prime_power;
    const bool claw_members = a == 2 || a == 3 || a == 4 || t.cyclic_pq || t.elementary_rank2 == 2 || t.alternating4;
    if (r.claw_free != claw_members) ++induced_disagreements;
    rec.record(i, {
                      iff("triangle-free", r.triangle_free, a == 2 || a == 3 || t.cyclic_pq || t.nonabelian_pq),
                      iff("cycle", r.cycle.has_value(), a == 4 || t.elementary_rank2 == 2),
                      holds(!r.cycle || *r.cycle == 3, "cycle length is not 3"),
                      iff("path P_n, n>=1", path_positive(r), a == 3 || t.cyclic_pq),
                      holds(!path_positive(r) || *r.path == 1, "path length is not 1"),
                      iff("K4", is_named(p, "K4"), a == 5 || t.cyclic_p2q || t.elementary_rank2 == 3 || t.quaternion8),
                      iff("no K_{1,3} subgraph", !p.claw_subgraph, claw_members),
                  });
  }
  rec.finding("reading claw-free as induced would disagree with the claw-free list on " +
              std::to_string(induced_disagreements) + " corpus group(s); every complete graph is induced-claw-free");
  return rec.finish();
}

TheoremReport verify_corollary_equivalences(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "corollary-equivalences",
               "Finite G: triangle-free, bipartite, complete bipartite, tree and star are equivalent for "
               "Gamma_c(G); no P_2 subgraph iff Z_{p^2}, Z_{p^3}, Z_pq; girth is infinite on Z_{p^2}, "
               "Z_{p^3}, Z_pq, Z_q x| Z_p and 3 otherwise");
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    const auto& r = p.report;
    const auto& t = p.types;
    const int a = t.cyclic_prime_power;
    const bool acyclic_types = a == 2 || a == 3 || t.cyclic_pq || t.nonabelian_pq;
    const bool all_equal = r.triangle_free == r.bipartite && r.bipartite == r.complete_bipartite &&
                           r.complete_bipartite == r.tree && r.tree == r.star;
    rec.record(i, {
                      holds(all_equal, "triangle-free/bipartite/complete-bipartite/tree/star disagree"),
                      iff("no P_2 subgraph", !p.path2_subgraph, a == 2 || a == 3 || t.cyclic_pq),
                      holds(r.girth.is_infinite() || r.girth.value() == 3, "girth " + r.girth.to_string()),
                      iff("infinite girth", r.girth.is_infinite(), acyclic_types),
                  });
  }
  return rec.finish();
}

TheoremReport verify_totally_disconnected(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "totally-disconnected", "Gamma_c(G) has no edges iff G is Z_{p^2}");
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    rec.record(i, {iff("totally disconnected", p.report.totally_disconnected, p.types.cyclic_prime_power == 2)});
  }
  return rec.finish();
}

TheoremReport verify_universal_vertex_and_planarity(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "universal-vertex-and-planarity",
               "A universal vertex (permutable proper cyclic subgroup) forces connectivity with diameter "
               "<= 2, and regularity then forces completeness; abelian G has planar Gamma_c iff Z_{p^a} "
               "(a=2..5), Z_pq, Z_{p^2q}, Z_2xZ_2, Z_3xZ_3; abelian groups and modular groups M_{p^a} "
               "(p odd or a >= 4) have complete Gamma_c");
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    const auto& r = p.report;
    const auto& t = p.types;
    const int a = t.cyclic_prime_power;
    std::vector<Check> checks{
        holds(!p.has_universal_vertex || (r.connected && !r.diameter.is_infinite() && r.diameter.value() <= 2),
              "universal vertex without connectivity/diameter <= 2"),
        holds(!(p.has_universal_vertex && r.regular) || r.complete, "regular with universal vertex but not complete"),
    };
    if (e.is_abelian) {
      checks.push_back(iff("planar", r.planar,
                           (a >= 2 && a <= 5) || t.cyclic_pq || t.cyclic_p2q || t.elementary_rank2 == 2 ||
                               t.elementary_rank2 == 3));
      checks.push_back(holds(r.complete, "abelian group with non-complete graph"));
    }
    if (e.spec.family == Family::modular && (e.spec.params[0] != 2 || e.spec.params[1] >= 4))
      checks.push_back(holds(r.complete, "modular group with non-complete graph"));
    rec.record(i, checks);
  }
  return rec.finish();
}

TheoremReport verify_characterizations(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "characterizations",
               "Non-abelian G with Gamma_c(G) = K_4 is Q_8; Gamma_c(G) = K_{1,3} forces G = S_3; "
               "Gamma_c(G) = K_3 + 4K_1 forces G = A_4");
  bool saw_q8 = false, saw_s3 = false, saw_a4 = false;
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!p.defined) continue;
    const auto& t = p.types;
    saw_q8 |= t.quaternion8;
    saw_s3 |= t.symmetric3;
    saw_a4 |= t.alternating4;
    std::vector<Check> checks{
        iff("K1,3", is_named(p, "K1,3"), t.symmetric3),
        iff("K3+4K1", is_named(p, "K3+4K1"), t.alternating4),
    };
    if (!e.is_abelian) checks.push_back(iff("K4 (non-abelian)", is_named(p, "K4"), t.quaternion8));
    rec.record(i, checks);
  }
  if (!saw_q8) rec.finding("no group isomorphic to Q_8 in corpus");
  if (!saw_s3) rec.finding("no group isomorphic to S_3 in corpus");
  if (!saw_a4) rec.finding("no group isomorphic to A_4 in corpus");
  return rec.finish();
}

TheoremReport verify_nonabelian_props(const AnalyzedCorpus& ac) {
  Recorder rec(ac, "nonabelian-properties",
               "Non-abelian G: order pq (p<q) gives K_{1,q}; order p^a (a>=3), p^2q, p^aq (a>=3), p^aq^b "
               "(a,b>=2) and orders with >= 3 prime factors give a triangle and at least five vertices; "
               "all of these except A_4 contain K_{1,3} as a subgraph, and Q_8 gives K_4");
  for (std::size_t i = 0; i < ac.profiles.size(); ++i) {
    const auto& e = ac.corpus.entries[i];
    const auto& p = ac.profiles[i];
    if (!p.defined || e.is_abelian) continue;
    const auto& f = e.factorization;
    const auto& r = p.report;
    const bool triangle = !r.triangle_free;
    std::vector<Check> checks;
    if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
      const std::string star = "K1," + std::to_string(f[1].first);
      checks.push_back(holds(is_named(p, star), "graph is not " + star));
    } else if (p.types.quaternion8) {
      checks.push_back(holds(is_named(p, "K4"), "Q_8 graph is not K4"));
    } else {
      checks.push_back(holds(triangle, "no triangle"));
      checks.push_back(holds(r.vertices >= 5, "fewer than five vertices"));
      if (p.types.alternating4) {
        checks.push_back(holds(!p.claw_subgraph, "A_4 graph contains K_{1,3}"));
        checks.push_back(holds(is_named(p, "K3+4K1"), "A_4 graph is not K3+4K1"));
      } else {
        checks.push_back(holds(p.claw_subgraph, "no K_{1,3} subgraph"));
      }
    }
    rec.record(i, checks);
  }
  return rec.finish();
}

std::vector<TheoremReport> run_all_verifiers(const AnalyzedCorpus& ac) {
  return {
      verify_cyclic_complete(ac),        verify_abelian_classification(ac),
      verify_main_theorem(ac),           verify_corollary_equivalences(ac),
      verify_totally_disconnected(ac),   verify_universal_vertex_and_planarity(ac),
      verify_characterizations(ac),      verify_nonabelian_props(ac),
  };
}

std::string to_json(const std::vector<TheoremReport>& reports, bool include_timings) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["scope"] = r.scope;
    j["passed"] = r.passed();
    j["checked"] = r.verdicts.size();
    auto verdicts = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts)
      verdicts.push_back({{"index", v.index}, {"group", v.group}, {"pass", v.pass}, {"detail", v.detail}});
    j["verdicts"] = std::move(verdicts);
    auto counter = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) counter.push_back({{"group", c.group}, {"reason", c.reason}});
    j["counterexamples"] = std::move(counter);
    j["findings"] = r.findings;
    if (include_timings) j["duration_ms"] = r.duration_ms;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace permgraph
