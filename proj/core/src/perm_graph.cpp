#include "permgraph/perm_graph.hpp"

#include <sstream>

#include <json.hpp>

#include "permgraph/error.hpp"

namespace permgraph {

namespace {

PermGraph build_over(const GroupTable& g, std::vector<SubgroupSet> vertices) {
  if (vertices.empty())
    throw Error(ErrorKind::undefined_graph,
                "group " + g.spec_string() + " has no proper nontrivial cyclic subgroup");
  PermGraph gr{std::move(vertices), Graph(0), g.spec_string()};
  const std::size_t n = gr.vertices.size();
  gr.adjacency = Graph(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (permutes(g, gr.vertices[u], gr.vertices[v])) gr.adjacency.add_edge(u, v);
  return gr;
}

}  // namespace

PermGraph build_gamma_c(const GroupTable& g) { return build_over(g, cyclic_subgroups(g).proper); }

PermGraph build_gamma_all(const GroupTable& g, std::size_t max_order) {
  std::vector<SubgroupSet> proper;
  for (auto& h : all_subgroups(g, max_order))
    if (h.size() != 1 && h.size() != g.order()) proper.push_back(std::move(h));
  return build_over(g, std::move(proper));
}

std::vector<std::size_t> universal_vertices(const Graph& graph) {
  std::vector<std::size_t> out;
  const std::size_t n = graph.vertex_count();
  for (std::size_t v = 0; v < n; ++v)
    if (graph.degree(v) + 1 == n) out.push_back(v);
  return out;
}

std::string to_json(const PermGraph& gr) {
  nlohmann::ordered_json doc;
  doc["group"] = gr.group_spec;
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& h : gr.vertices) {
    nlohmann::ordered_json v;
    v["order"] = h.size();
    if (h.generator())
      v["generator"] = *h.generator();
    else
      v["generator"] = nullptr;
    v["elements"] = h.elements().to_vector();
    vertices.push_back(std::move(v));
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : gr.adjacency.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string to_dot(const PermGraph& gr) {
  std::ostringstream out;
  out << "graph \"" << gr.group_spec << "\" {\n";
  for (std::size_t i = 0; i < gr.vertices.size(); ++i)
    out << "  v" << i << " [label=\"C" << gr.vertices[i].size() << '#' << i << "\"];\n";
  for (const auto& [u, v] : gr.adjacency.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace permgraph
