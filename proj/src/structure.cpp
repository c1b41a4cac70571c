#include "zfdom/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace zfdom {

DeltaDPartition delta_d_partition(const Graph& g) {
  if (!is_cubic(g) || !is_connected(g) || !is_claw_free(g))
    throw std::invalid_argument(
        "delta_d_partition: requires a connected cubic claw-free graph");
  if (g.n == 4)
    throw std::invalid_argument("delta_d_partition: K4 has no unit partition");

  DeltaDPartition p;
  p.unit_of.assign(g.n, -1);

  VertexSet covered = 0;
  for (VertexSet d : find_diamonds(g)) {
    if (d & covered)
      throw std::invalid_argument("delta_d_partition: overlapping diamonds");
    p.units.push_back(make_diamond_unit(g, d));
    covered |= d;
  }
  for (size_t i = 0; i < p.units.size(); ++i) {
    VertexSet scan = p.units[i].members;
    while (scan) {
      p.unit_of[vs_min(scan)] = static_cast<int>(i);
      scan &= scan - 1;
    }
  }

  // Every remaining vertex must lie in exactly one triangle of remaining
  // vertices; in a cubic claw-free graph each vertex's neighborhood spans an
  // edge, and ambiguity would mean an undetected diamond.
  for (int v = 0; v < g.n; ++v) {
    if (vs_has(covered, v) || p.unit_of[v] != -1) continue;
    int found_u = -1, found_w = -1, count = 0;
    std::vector<int> nb = vs_to_vector(g.adj[v] & ~covered);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) {
          found_u = nb[i];
          found_w = nb[j];
          ++count;
        }
    if (count != 1)
      throw std::invalid_argument(
          "delta_d_partition: vertex " + std::to_string(v) +
          " is not in a unique triangle unit");
    Unit t;
    t.kind = UnitKind::triangle;
    t.members = vs_bit(v) | vs_bit(found_u) | vs_bit(found_w);
    int idx = static_cast<int>(p.units.size());
    p.units.push_back(t);
    p.unit_of[v] = p.unit_of[found_u] = p.unit_of[found_w] = idx;
    covered |= t.members;
  }

  // Cross edges, one multiset entry each; unit degrees double as a sanity
  // check on the decomposition.
  std::vector<int> out_degree(p.units.size(), 0);
  for (auto [u, v] : g.edges()) {
    int a = p.unit_of[u], b = p.unit_of[v];
    if (a == b) continue;
    p.unit_adjacency.emplace_back(std::min(a, b), std::max(a, b));
    ++out_degree[a];
    ++out_degree[b];
  }
  std::sort(p.unit_adjacency.begin(), p.unit_adjacency.end());
  for (size_t i = 0; i < p.units.size(); ++i) {
    int expect = p.units[i].kind == UnitKind::triangle ? 3 : 2;
    if (out_degree[i] != expect)
      throw std::invalid_argument(
          "delta_d_partition: unit " + std::to_string(i) +
          " has " + std::to_string(out_degree[i]) + " outgoing edges, expected " +
          std::to_string(expect));
  }
  return p;
}

Multigraph contraction_multigraph(const DeltaDPartition& p) {
  for (size_t i = 0; i < p.units.size(); ++i)
    if (p.units[i].kind != UnitKind::triangle)
      throw std::invalid_argument(
          "contraction_multigraph: unit " + std::to_string(i) +
          " is a diamond; the contraction multigraph is defined only for "
          "all-triangle partitions");
  Multigraph m;
  m.n = static_cast<int>(p.units.size());
  m.edges = p.unit_adjacency;
  return m;
}

Unit make_diamond_unit(const Graph& g, VertexSet members) {
  std::vector<int> vs = vs_to_vector(members);
  if (vs.size() != 4)
    throw std::invalid_argument("make_diamond_unit: expected 4 vertices");
  for (int v : vs)
    if (v >= g.n)
      throw std::invalid_argument("make_diamond_unit: vertex out of range");
  int edges = 0, miss_a = -1, miss_b = -1;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) {
      if (g.has_edge(vs[i], vs[j]))
        ++edges;
      else {
        miss_a = vs[i];
        miss_b = vs[j];
      }
    }
  if (edges != 5)
    throw std::invalid_argument(
        "make_diamond_unit: " + vs_to_string(members) +
        " induces " + std::to_string(edges) + " edges, expected 5");
  Unit u;
  u.kind = UnitKind::diamond;
  u.members = members;
  u.a = std::min(miss_a, miss_b);
  u.b = std::max(miss_a, miss_b);
  std::vector<int> cd;
  for (int v : vs)
    if (v != u.a && v != u.b) cd.push_back(v);
  u.c = cd[0];
  u.d = cd[1];
  return u;
}

Graph contract_diamond(const Graph& g, const Unit& d) {
  if (d.kind != UnitKind::diamond)
    throw std::invalid_argument("contract_diamond: unit is not a diamond");
  // Re-derive the roles defensively; this also validates membership.
  Unit u = make_diamond_unit(g, d.members);
  VertexSet ea = g.adj[u.a] & ~u.members;
  VertexSet fb = g.adj[u.b] & ~u.members;
  if (vs_count(ea) != 1 || vs_count(fb) != 1)
    throw std::invalid_argument(
        "contract_diamond: degree-2 pair must have exactly one outside "
        "neighbor each");
  int e = vs_min(ea), f = vs_min(fb);
  if (e == f)
    throw std::invalid_argument(
        "contract_diamond: outside neighbors coincide at vertex " +
        std::to_string(e));
  if (g.has_edge(e, f))
    throw std::invalid_argument(
        "contract_diamond: outside neighbors " + std::to_string(e) + " and " +
        std::to_string(f) + " are adjacent; contraction undefined");
  // Order-preserving relabeling of the surviving vertices.
  std::vector<int> new_label(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (!vs_has(u.members, v)) new_label[v] = next++;
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : g.edges())
    if (!vs_has(u.members, x) && !vs_has(u.members, y))
      edges.emplace_back(new_label[x], new_label[y]);
  edges.emplace_back(std::min(new_label[e], new_label[f]),
                     std::max(new_label[e], new_label[f]));
  return from_edge_list(g.n - 4, edges);
}

Graph contract_diamond(const Graph& g, VertexSet diamond_members) {
  return contract_diamond(g, make_diamond_unit(g, diamond_members));
}

}  // namespace zfdom
