#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/perm_graph.hpp"

namespace permgraph {

// Non-negative length that may be infinite (girth of an acyclic graph,
// diameter of a disconnected one).
class Length {
 public:
  static constexpr Length infinite() { return Length(); }
  static constexpr Length finite(std::size_t v) { return Length(v); }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  constexpr std::size_t value() const { return value_.value(); }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  constexpr bool operator==(const Length&) const = default;

 private:
  constexpr Length() = default;
  constexpr explicit Length(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

struct AnalysisReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  Length diameter = Length::infinite();
  Length girth = Length::infinite();
  bool bipartite = false;
  bool complete = false;
  bool complete_bipartite = false;
  bool tree = false;
  bool star = false;
  std::optional<std::size_t> path;   // edge count n when the graph is P_n
  std::optional<std::size_t> cycle;  // n when the graph is C_n
  std::optional<std::size_t> regular;  // common degree when regular
  bool totally_disconnected = false;
  bool triangle_free = false;
  bool claw_free = false;  // no induced K_{1,3}
  bool unicyclic = false;
  bool planar = false;
  std::optional<std::string> recognized_name;
};

AnalysisReport analyze(const Graph& graph);
inline AnalysisReport analyze(const PermGraph& gr) { return analyze(gr.adjacency); }

// Flat JSON object; text form uses the same field names, one per line.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

// --- individual deciders ---------------------------------------------------

std::size_t component_count(const Graph& graph);
Length diameter(const Graph& graph);
Length girth(const Graph& graph);
bool is_bipartite(const Graph& graph);
bool has_triangle(const Graph& graph);
bool has_induced_claw(const Graph& graph);
// K_{1,3} as a (not necessarily induced) subgraph: some vertex of degree >= 3.
bool has_claw_subgraph(const Graph& graph);
// Path with two edges as an induced subgraph / as any subgraph.
bool has_induced_path2(const Graph& graph);
bool has_path2_subgraph(const Graph& graph);
// Exact: Euler bound rejection, then edge-addition (Boyer-Myrvold) test.
bool is_planar(const Graph& graph);

// Canonical ASCII name when every component is a recognized family:
// "K4", "K1,3", "K2,3", "C5", "P3", joined as "K3+4K1" for disjoint unions.
std::optional<std::string> recognize(const Graph& graph);

// Standard named graphs: "K<n>", "K<m>,<n>", "C<n>" (n >= 3), "P<n>" (n
// edges), "<k>K1"-style multiples and "+"-joined disjoint unions, e.g.
// "K3+4K1". Throws Error{invalid_parameter} on malformed names.
Graph make_named(std::string_view name);

// Exact isomorphism by refinement plus backtracking. Returns the vertex map
// g1 -> g2 on success. Throws Error{size_limit} above `max_vertices`.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                         std::size_t max_vertices = 256);
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace permgraph
