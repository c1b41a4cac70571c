#pragma once

// Graph sources: the diamond-necklace family, named fixture graphs, an
// isomorphism-free enumerator for cubic graphs (and general graphs at small
// orders), and a canonical form for isomorphism tests.

#include <functional>
#include <string>
#include <vector>

#include "zfdom/graph.hpp"

namespace zfdom {

// Necklace of k >= 2 diamonds: diamond i occupies vertices 4i..4i+3 as
// a=4i, b=4i+1, c=4i+2, d=4i+3 with ab the missing edge, and link edges
// a_i -> b_{i+1 mod k} close the ring. Throws std::invalid_argument for
// k < 2 or 4k > 64.
Graph diamond_necklace(int k);

// Fixture graphs used throughout the tests and docs:
//   "K4"           complete graph on 4 vertices
//   "prism"        two triangles joined by a perfect matching (C3 x K2)
//   "fig7_order10" diamond bridging two triangles, order 10
//   "fig9_order14" two diamonds and two triangles in a chain, order 14
// Throws std::invalid_argument on any other name.
Graph named_graph(const std::string& name);

struct CubicEnumerationConfig {
  int n = 4;  // even, 4 <= n <= 16
  bool require_connected = true;
  bool require_claw_free = false;
  bool require_diamond_free = false;
};

// Streams exactly one representative per isomorphism class of cubic graphs
// on config.n vertices satisfying the filters, in a deterministic order.
// Orderly generation: vertices are added one at a time with their neighbor
// sets among earlier vertices, keeping a partial graph only when its
// column-major adjacency bitstring is lexicographically maximal over all
// relabelings; every canonical graph's last-vertex-deleted prefix is again
// canonical, so the search is exhaustive without an isomorphism cache.
void enumerate_cubic(const CubicEnumerationConfig& config,
                     const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate_cubic_collect(const CubicEnumerationConfig& config);

// Same machinery without the degree-3 target: one representative per
// isomorphism class of ALL graphs on n vertices (any degrees <= max_degree,
// connected or not). Practical for n <= 8.
void enumerate_graphs(int n, int max_degree,
                      const std::function<void(const Graph&)>& emit);

// Canonical labeling of g (lexicographically minimal column-major adjacency
// bitstring over all relabelings), returned as its graph6 line so equal
// strings mean isomorphic graphs. Guarded to n <= 16.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

}  // namespace zfdom
