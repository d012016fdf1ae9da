#pragma once

#include <string>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/group.hpp"
#include "permgraph/subgroup.hpp"

namespace permgraph {

// Permutability graph: vertices are proper nontrivial subgroups in canonical
// order; two vertices are adjacent iff the subgroups permute.
struct PermGraph {
  std::vector<SubgroupSet> vertices;
  Graph adjacency;
  std::string group_spec;
};

// Graph of cyclic subgroups. Throws Error{undefined_graph} when the group has
// no proper nontrivial cyclic subgroup (trivial or prime order).
PermGraph build_gamma_c(const GroupTable& g);

// Same construction over all proper nontrivial subgroups (order <= 200).
PermGraph build_gamma_all(const GroupTable& g, std::size_t max_order = 200);

// Vertices adjacent to every other vertex.
std::vector<std::size_t> universal_vertices(const Graph& graph);
inline std::vector<std::size_t> universal_vertices(const PermGraph& gr) {
  return universal_vertices(gr.adjacency);
}

// {"group": ..., "vertices": [{"order", "generator", "elements"}], "edges": [[i, j]]}
std::string to_json(const PermGraph& gr);
// Undirected DOT, vertex labels "C<order>#<index>".
std::string to_dot(const PermGraph& gr);

}  // namespace permgraph
