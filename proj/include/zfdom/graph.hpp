#pragma once

// Core graph type and predicates for small simple undirected graphs (n <= 64).
// Vertex sets are 64-bit masks so neighborhood algebra compiles to a few
// word ops; everything downstream (forcing, domination, enumeration) leans
// on that representation.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zfdom {

using VertexSet = std::uint64_t;

inline constexpr VertexSet vs_bit(int v) { return VertexSet{1} << v; }
inline constexpr bool vs_has(VertexSet s, int v) { return (s >> v) & 1; }
inline constexpr int vs_count(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet vs_full(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
// Lowest-index member; only meaningful for nonempty sets.
inline constexpr int vs_min(VertexSet s) { return std::countr_zero(s); }

std::vector<int> vs_to_vector(VertexSet s);
std::string vs_to_string(VertexSet s);  // e.g. "{0,3,5}"

struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // adj[v] = open neighborhood of v

  bool has_edge(int u, int v) const { return vs_has(adj[u], v); }
  int degree(int v) const { return vs_count(adj[v]); }
  VertexSet neighborhood(int v) const { return adj[v]; }
  VertexSet closed_neighborhood(int v) const { return adj[v] | vs_bit(v); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, sorted

  bool operator==(const Graph&) const = default;
};

// Builds a graph from an explicit edge list. Throws std::invalid_argument on
// n outside [1,64], an endpoint outside [0,n), a loop, or a duplicate edge.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// graph6 text format (the de-facto interchange format for small graphs):
// one printable-ASCII line, header byte n+63, then the upper triangle of the
// adjacency matrix read column by column ((0,1),(0,2),(1,2),(0,3),...) packed
// into 6-bit groups, each group + 63. Only the short form (n <= 62) is
// supported here. parse_graph6 throws std::runtime_error on malformed input.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

bool is_cubic(const Graph& g);      // every degree exactly 3
bool is_connected(const Graph& g);  // true for n = 1

// A claw is an induced K_{1,3}: a vertex with three pairwise nonadjacent
// neighbors. Claw-free means no such induced subgraph exists.
bool is_claw_free(const Graph& g);

// All 4-vertex subsets inducing exactly five edges (K4 minus an edge).
// Reported in lexicographic order of the sorted vertex quadruple. K4 itself
// induces six edges, so it contains no diamond.
std::vector<VertexSet> find_diamonds(const Graph& g);

}  // namespace zfdom
