#include "permgraph/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

#include "permgraph/error.hpp"

namespace permgraph {

namespace {

using AdjList = std::vector<std::vector<std::size_t>>;

AdjList adjacency_lists(const Graph& graph) {
  AdjList adj(graph.vertex_count());
  for (std::size_t v = 0; v < adj.size(); ++v)
    graph.neighbors(v).for_each([&](Element u) { adj[v].push_back(u); });
  return adj;
}

constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

std::vector<std::size_t> bfs_distances(const AdjList& adj, std::size_t root) {
  std::vector<std::size_t> dist(adj.size(), kUnseen);
  std::deque<std::size_t> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u])
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Component label per vertex, labels in order of first vertex.
std::vector<std::size_t> component_labels(const AdjList& adj, std::size_t* count) {
  std::vector<std::size_t> label(adj.size(), kUnseen);
  std::size_t next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] != kUnseen) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u])
        if (label[w] == kUnseen) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

// 2-coloring; empty when the graph is not bipartite.
std::optional<std::vector<int>> two_coloring(const AdjList& adj) {
  std::vector<int> color(adj.size(), -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph induced_subgraph(const Graph& graph, const std::vector<std::size_t>& keep) {
  Graph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (graph.has_edge(keep[i], keep[j])) sub.add_edge(i, j);
  return sub;
}

// Name of a connected graph, if it belongs to a recognized family.
std::optional<std::string> connected_name(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 1) return "K1";
  if (m == n * (n - 1) / 2) return "K" + std::to_string(n);
  const auto adj = adjacency_lists(g);
  const auto coloring = two_coloring(adj);
  if (coloring) {
    const auto left = static_cast<std::size_t>(std::count(coloring->begin(), coloring->end(), 0));
    const std::size_t a = std::min(left, n - left);
    const std::size_t b = std::max(left, n - left);
    if (a * b == m) {
      if (a == 1) return "K1," + std::to_string(b);
      if (!(a == 2 && b == 2)) return "K" + std::to_string(a) + "," + std::to_string(b);
    }
  }
  bool two_regular = true;
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != 2) two_regular = false;
    if (g.degree(v) == 1) ++leaves;
  }
  if (two_regular) return "C" + std::to_string(n);
  if (m + 1 == n && leaves == 2) return "P" + std::to_string(m);
  return std::nullopt;
}

}  // namespace

std::size_t component_count(const Graph& graph) {
  std::size_t count = 0;
  component_labels(adjacency_lists(graph), &count);
  return count;
}

Length diameter(const Graph& graph) {
  const auto adj = adjacency_lists(graph);
  std::size_t best = 0;
  for (std::size_t s = 0; s < adj.size(); ++s)
    for (std::size_t d : bfs_distances(adj, s)) {
      if (d == kUnseen) return Length::infinite();
      best = std::max(best, d);
    }
  return Length::finite(best);
}

Length girth(const Graph& graph) {
  // For every root, a non-tree edge (u, w) closes a closed walk of length
  // dist[u] + dist[w] + 1 containing a cycle at most that long; the minimum
  // over all roots is attained on a shortest cycle.
  const auto adj = adjacency_lists(graph);
  std::size_t best = kUnseen;
  for (std::size_t root = 0; root < adj.size(); ++root) {
    std::vector<std::size_t> dist(adj.size(), kUnseen), parent(adj.size(), kUnseen);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (std::size_t w : adj[u]) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kUnseen ? Length::infinite() : Length::finite(best);
}

bool is_bipartite(const Graph& graph) { return two_coloring(adjacency_lists(graph)).has_value(); }

bool has_triangle(const Graph& graph) {
  for (const auto& [u, v] : graph.edges())
    if (!(graph.neighbors(u) & graph.neighbors(v)).empty()) return true;
  return false;
}

bool has_induced_claw(const Graph& graph) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) < 3) continue;
    const auto nbrs = graph.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Element a = nbrs[i];
        const Element b = nbrs[j];
        if (graph.has_edge(a, b)) continue;
        // A third neighbor adjacent to neither a nor b completes the claw.
        ElementSet rest = graph.neighbors(v);
        rest.subtract(graph.neighbors(a)).subtract(graph.neighbors(b));
        rest.erase(a);
        rest.erase(b);
        if (!rest.empty()) return true;
      }
  }
  return false;
}

bool has_claw_subgraph(const Graph& graph) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) >= 3) return true;
  return false;
}

bool has_induced_path2(const Graph& graph) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const auto nbrs = graph.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!graph.has_edge(nbrs[i], nbrs[j])) return true;
  }
  return false;
}

bool has_path2_subgraph(const Graph& graph) {
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) >= 2) return true;
  return false;
}

bool is_planar(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  if (n < 5) return true;
  if (m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(n);
  for (const auto& [u, v] : graph.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::string> recognize(const Graph& graph) {
  const auto adj = adjacency_lists(graph);
  std::size_t count = 0;
  const auto label = component_labels(adj, &count);
  if (count == 1) return connected_name(graph);

  struct Part {
    std::size_t size;
    std::string name;
  };
  std::vector<Part> parts;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (label[v] == c) members.push_back(v);
    auto name = connected_name(induced_subgraph(graph, members));
    if (!name) return std::nullopt;
    parts.push_back({members.size(), std::move(*name)});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.name < b.name;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].name == parts[i].name) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].name;
    i = j;
  }
  return out;
}

AnalysisReport analyze(const Graph& graph) {
  AnalysisReport r;
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  r.vertices = n;
  r.edges = m;
  const auto adj = adjacency_lists(graph);
  std::size_t components = 0;
  component_labels(adj, &components);
  r.connected = components <= 1;
  r.diameter = diameter(graph);
  r.girth = girth(graph);

  const auto coloring = two_coloring(adj);
  r.bipartite = coloring.has_value();
  r.complete = m == n * (n - 1) / 2;
  if (n == 1) {
    // K1 is read as K_{1,0}.
    r.complete_bipartite = true;
    r.star = true;
  } else if (coloring && r.connected) {
    const auto left = static_cast<std::size_t>(std::count(coloring->begin(), coloring->end(), 0));
    r.complete_bipartite = left * (n - left) == m;
    r.star = r.complete_bipartite && std::min(left, n - left) == 1;
  }
  r.tree = r.connected && m + 1 == n;

  std::size_t leaves = 0;
  std::size_t twos = 0;
  bool regular = true;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = graph.degree(v);
    if (d == 1) ++leaves;
    if (d == 2) ++twos;
    if (d != graph.degree(0)) regular = false;
  }
  if (r.tree && (n <= 2 || (leaves == 2 && twos + 2 == n))) r.path = m;
  if (r.connected && n >= 3 && twos == n) r.cycle = n;
  if (regular && n > 0) r.regular = graph.degree(0);

  r.totally_disconnected = m == 0;
  r.triangle_free = !has_triangle(graph);
  r.claw_free = !has_induced_claw(graph);
  r.unicyclic = m + components == n + 1;
  r.planar = is_planar(graph);
  r.recognized_name = recognize(graph);
  return r;
}

namespace {

nlohmann::ordered_json report_json(const AnalysisReport& r) {
  auto length = [](const Length& l) -> nlohmann::ordered_json {
    if (l.is_infinite()) return "inf";
    return l.value();
  };
  auto maybe = [](const auto& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::ordered_json j;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["diameter"] = length(r.diameter);
  j["girth"] = length(r.girth);
  j["bipartite"] = r.bipartite;
  j["complete"] = r.complete;
  j["complete_bipartite"] = r.complete_bipartite;
  j["tree"] = r.tree;
  j["star"] = r.star;
  j["path"] = maybe(r.path);
  j["cycle"] = maybe(r.cycle);
  j["regular"] = maybe(r.regular);
  j["totally_disconnected"] = r.totally_disconnected;
  j["triangle_free"] = r.triangle_free;
  j["claw_free"] = r.claw_free;
  j["unicyclic"] = r.unicyclic;
  j["planar"] = r.planar;
  j["recognized_name"] = maybe(r.recognized_name);
  return j;
}

}  // namespace

std::string to_json(const AnalysisReport& report) { return report_json(report).dump() + "\n"; }

std::string to_text(const AnalysisReport& report) {
  std::ostringstream out;
  const auto j = report_json(report);
  for (const auto& [key, value] : j.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return out.str();
}

// --- named graphs ----------------------------------------------------------

Graph make_named(std::string_view name) {
  auto fail = [&]() -> Graph {
    throw Error(ErrorKind::invalid_parameter, "malformed graph name '" + std::string(name) + "'");
  };
  auto read_int = [&](std::string_view& s, std::size_t& out) {
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) return false;
    out = 0;
    while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
      out = out * 10 + static_cast<std::size_t>(s.front() - '0');
      if (out > 4096) return false;
      s.remove_prefix(1);
    }
    return true;
  };

  std::vector<Graph> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find('+', start);
    if (end == std::string_view::npos) end = name.size();
    std::string_view part = name.substr(start, end - start);
    start = end + 1;
    std::size_t copies = 1;
    if (!part.empty() && std::isdigit(static_cast<unsigned char>(part.front())))
      if (!read_int(part, copies) || copies == 0) fail();
    if (part.empty()) fail();
    const char kind = part.front();
    part.remove_prefix(1);
    Graph base;
    std::size_t a = 0, b = 0;
    if (kind == 'K' && part.starts_with("bar")) {
      part.remove_prefix(3);
      if (!read_int(part, a) || a == 0 || !part.empty()) fail();
      base = Graph(a);
    } else if (kind == 'K') {
      if (!read_int(part, a) || a == 0) fail();
      if (part.empty()) {
        base = Graph(a);
        for (std::size_t u = 0; u < a; ++u)
          for (std::size_t v = u + 1; v < a; ++v) base.add_edge(u, v);
      } else {
        if (part.front() != ',') fail();
        part.remove_prefix(1);
        if (!read_int(part, b) || !part.empty()) fail();
        base = Graph(a + b);
        for (std::size_t u = 0; u < a; ++u)
          for (std::size_t v = 0; v < b; ++v) base.add_edge(u, a + v);
      }
    } else if (kind == 'C') {
      if (!read_int(part, a) || a < 3 || !part.empty()) fail();
      base = Graph(a);
      for (std::size_t u = 0; u < a; ++u) base.add_edge(u, (u + 1) % a);
    } else if (kind == 'P') {
      if (!read_int(part, a) || !part.empty()) fail();
      base = Graph(a + 1);
      for (std::size_t u = 0; u < a; ++u) base.add_edge(u, u + 1);
    } else {
      fail();
    }
    for (std::size_t i = 0; i < copies; ++i) parts.push_back(base);
    if (end == name.size()) break;
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.vertex_count();
  Graph out(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& [u, v] : p.edges()) out.add_edge(offset + u, offset + v);
    offset += p.vertex_count();
  }
  return out;
}

// --- isomorphism -----------------------------------------------------------

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                         std::size_t max_vertices) {
  const std::size_t n = g1.vertex_count();
  if (n > max_vertices || g2.vertex_count() > max_vertices)
    throw Error(ErrorKind::size_limit, "graph isomorphism above vertex cap");
  if (g2.vertex_count() != n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};

  // Joint color refinement: colors start as degrees and are refined by the
  // multiset of neighbor colors, with one shared dictionary for both graphs.
  std::vector<std::size_t> c1(n), c2(n);
  for (std::size_t v = 0; v < n; ++v) {
    c1[v] = g1.degree(v);
    c2[v] = g2.degree(v);
  }
  const auto adj1 = adjacency_lists(g1);
  const auto adj2 = adjacency_lists(g2);
  auto histogram = [](std::vector<std::size_t> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(c1) != histogram(c2)) return std::nullopt;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> dict;
    auto signature = [&](const AdjList& adj, const std::vector<std::size_t>& c, std::size_t v) {
      std::vector<std::size_t> around;
      for (std::size_t w : adj[v]) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      return std::make_pair(c[v], std::move(around));
    };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> s1(n), s2(n);
    for (std::size_t v = 0; v < n; ++v) {
      s1[v] = signature(adj1, c1, v);
      s2[v] = signature(adj2, c2, v);
      dict.emplace(s1[v], 0);
      dict.emplace(s2[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      c1[v] = dict[s1[v]];
      c2[v] = dict[s2[v]];
    }
    if (histogram(c1) != histogram(c2)) return std::nullopt;
    if (next == classes) break;
    classes = next;
  }

  // Match vertices of rare colors first, then grow along edges.
  std::vector<std::size_t> class_size(classes, 0);
  for (std::size_t v = 0; v < n; ++v) ++class_size[c1[v]];
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t best = kUnseen;
    std::size_t best_links = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (std::size_t w : adj1[v])
        if (placed[w]) ++links;
      if (best == kUnseen || links > best_links ||
          (links == best_links && class_size[c1[v]] < class_size[c1[best]])) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<std::size_t> map(n, kUnseen);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || c2[w] != c1[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const std::size_t u = order[i];
        ok = g1.has_edge(u, v) == g2.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      used[w] = false;
    }
    map[v] = kUnseen;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

}  // namespace permgraph
