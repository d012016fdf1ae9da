#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "permgraph/element_set.hpp"

namespace permgraph {

// Simple undirected graph on vertices 0..n-1 with bit-set adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, ElementSet(n)) {}

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  // Self-loops and repeated edges are ignored.
  void add_edge(std::size_t u, std::size_t v) {
    if (u == v || has_edge(u, v)) return;
    rows_[u].insert(static_cast<Element>(v));
    rows_[v].insert(static_cast<Element>(u));
    ++edges_;
  }

  bool has_edge(std::size_t u, std::size_t v) const noexcept {
    return rows_[u].contains(static_cast<Element>(v));
  }
  std::size_t degree(std::size_t v) const noexcept { return rows_[v].size(); }
  const ElementSet& neighbors(std::size_t v) const noexcept { return rows_[v]; }

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < rows_.size(); ++u)
      rows_[u].for_each([&](Element v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<ElementSet> rows_;
  std::size_t edges_ = 0;
};

}  // namespace permgraph
