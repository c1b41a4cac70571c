#include "zfdom/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace zfdom {

Graph diamond_necklace(int k) {
  if (k < 2)
    throw std::invalid_argument("diamond_necklace: k must be >= 2, got " +
                                std::to_string(k));
  if (4 * k > 64)
    throw std::invalid_argument("diamond_necklace: 4k exceeds 64 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int a = 4 * i, b = 4 * i + 1, c = 4 * i + 2, d = 4 * i + 3;
    edges.insert(edges.end(), {{a, c}, {a, d}, {b, c}, {b, d}, {c, d}});
    int bn = 4 * ((i + 1) % k) + 1;  // b of the next diamond
    edges.emplace_back(a, bn);
  }
  return from_edge_list(4 * k, edges);
}

Graph named_graph(const std::string& name) {
  if (name == "K4")
    return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "prism")
    return from_edge_list(6, {{0, 1}, {0, 2}, {1, 2},    // first triangle
                              {3, 4}, {3, 5}, {4, 5},    // second triangle
                              {0, 3}, {1, 4}, {2, 5}});  // matching
  if (name == "fig7_order10")
    // Diamond 0..3 (a,b,c,d; ab missing) hung between triangles {4,5,6} and
    // {7,8,9}; remaining triangle vertices pair up across.
    return from_edge_list(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {4, 5}, {4, 6}, {5, 6},
                               {7, 8}, {7, 9}, {8, 9},
                               {0, 4}, {1, 7}, {5, 8}, {6, 9}});
  if (name == "fig9_order14")
    // Chain: diamond 0..3, triangle 4..6, triangle 7..9, diamond 10..13,
    // with two edges at each diamond-triangle joint and one between the
    // triangles.
    return from_edge_list(14, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {1, 5}, {4, 5}, {4, 6}, {5, 6},
                               {6, 7}, {7, 8}, {7, 9}, {8, 9},
                               {8, 10}, {9, 11},
                               {10, 12}, {10, 13}, {11, 12}, {11, 13}, {12, 13}});
  throw std::invalid_argument(
      "named_graph: unknown name \"" + name +
      "\" (expected K4, prism, fig7_order10, or fig9_order14)");
}

namespace {

constexpr int kMaxEnumVertices = 16;

// True when swapping u and v while fixing every other vertex is an
// automorphism, i.e. their neighborhoods agree away from the pair. Branches
// related by such a swap explore identical label extensions, so the
// canonicity searches below expand only one of them.
bool swap_is_automorphism(const std::array<std::uint64_t, kMaxEnumVertices>& adj,
                          int u, int v) {
  return (adj[u] & ~vs_bit(v)) == (adj[v] & ~vs_bit(u));
}

// Does any relabeling of the c-vertex graph produce a strictly
// lexicographically greater column-major adjacency bitstring? Depth-first
// construction of the relabeling, comparing each new column against the
// original as soon as it is determined; a branch dies the moment its column
// drops below the original and wins the moment it rises above.
struct MaxCanonicityChecker {
  const std::array<std::uint64_t, kMaxEnumVertices>& adj;
  int c;
  std::array<int, kMaxEnumVertices> old_of{};
  std::uint64_t used = 0;

  bool found_greater(int depth) {
    if (depth == c) return false;  // full assignment -> automorphism
    std::array<int, kMaxEnumVertices> tried{};
    int tried_count = 0;
    for (int u = 0; u < c; ++u) {
      if (vs_has(used, u)) continue;
      bool dup = false;
      for (int t = 0; t < tried_count && !dup; ++t)
        if (swap_is_automorphism(adj, tried[t], u)) dup = true;
      if (dup) continue;
      // Column bits for u against the original column of vertex `depth`,
      // most significant first (j ascending).
      int cmp = 0;  // -1 candidate smaller, +1 greater, 0 equal so far
      for (int j = 0; j < depth && cmp == 0; ++j) {
        bool cand = vs_has(adj[u], old_of[j]);
        bool orig = vs_has(adj[depth], j);
        if (cand != orig) cmp = cand ? 1 : -1;
      }
      if (cmp == 1) return true;
      if (cmp == -1) continue;
      tried[tried_count++] = u;
      old_of[depth] = u;
      used |= vs_bit(u);
      bool greater = found_greater(depth + 1);
      used &= ~vs_bit(u);
      if (greater) return true;
    }
    return false;
  }
};

bool is_canonical_max(const std::array<std::uint64_t, kMaxEnumVertices>& adj,
                      int c) {
  MaxCanonicityChecker checker{adj, c};
  return !checker.found_greater(0);
}

// Shared orderly-generation core. Each recursion level fixes the neighbor
// set of the next vertex among the earlier ones; only canonical partial
// graphs are extended. `cubic_target` switches on the degree-3 feasibility
// arithmetic and (optionally) the closed-component pruning that are only
// sound when every final degree must be exactly 3.
struct OrderlyEnumerator {
  int n = 0;
  int max_degree = 3;
  bool cubic_target = false;
  bool prune_disconnected = false;
  const std::function<void(const Graph&)>* emit = nullptr;

  std::array<std::uint64_t, kMaxEnumVertices> adj{};
  std::array<int, kMaxEnumVertices> degree{};

  void run() {
    adj.fill(0);
    degree.fill(0);
    extend(1);  // a single vertex is trivially canonical
  }

  Graph snapshot(int c) const {
    Graph g;
    g.n = c;
    g.adj.assign(adj.begin(), adj.begin() + c);
    return g;
  }

  bool feasible(int c) const {
    if (!cubic_target) return true;
    int total_deficiency = 0;
    int future = n - c;
    for (int v = 0; v < c; ++v) {
      int def = 3 - degree[v];
      if (def > future) return false;  // each future vertex helps v once
      total_deficiency += def;
    }
    // Future vertices offer at most 3 edge endpoints each to the prefix...
    if (total_deficiency > 3 * future) return false;
    // ...and need 3 each themselves, with at most future-1 mutual partners.
    if (total_deficiency < future * (3 - (future - 1))) return false;
    if (prune_disconnected && future > 0 && has_closed_component(c))
      return false;
    return true;
  }

  // A connected component of the prefix whose vertices are all at full
  // degree can never link to the rest, so a connected completion is
  // impossible unless it already spans everything.
  bool has_closed_component(int c) const {
    std::uint64_t remaining = vs_full(c);
    while (remaining) {
      int start = vs_min(remaining);
      std::uint64_t comp = vs_bit(start), frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
          int v = vs_min(frontier);
          frontier &= frontier - 1;
          next |= adj[v] & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      bool closed = true;
      std::uint64_t scan = comp;
      while (scan && closed) {
        int v = vs_min(scan);
        scan &= scan - 1;
        if (degree[v] < 3) closed = false;
      }
      if (closed && comp != vs_full(c)) return true;
      remaining &= ~comp;
    }
    return false;
  }

  void try_column(int c, std::uint64_t column) {
    adj[c] = column;
    degree[c] = vs_count(column);
    std::uint64_t scan = column;
    while (scan) {
      int u = vs_min(scan);
      scan &= scan - 1;
      adj[u] |= vs_bit(c);
      ++degree[u];
    }
    if (feasible(c + 1) && is_canonical_max(adj, c + 1)) extend(c + 1);
    scan = column;
    while (scan) {
      int u = vs_min(scan);
      scan &= scan - 1;
      adj[u] &= ~vs_bit(c);
      --degree[u];
    }
    adj[c] = 0;
    degree[c] = 0;
  }

  void extend(int c) {
    if (c == n) {
      (*emit)(snapshot(c));
      return;
    }
    // Candidate neighbor sets for vertex c: subsets of earlier vertices that
    // still have spare degree, of size at most max_degree.
    std::vector<int> open;
    for (int u = 0; u < c; ++u)
      if (degree[u] < max_degree) open.push_back(u);
    int cap = std::min<int>(max_degree, static_cast<int>(open.size()));
    // Size 0.
    try_column(c, 0);
    // Sizes 1..cap via combination stepping over `open`.
    for (int k = 1; k <= cap; ++k) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        std::uint64_t column = 0;
        for (int i : idx) column |= vs_bit(open[i]);
        try_column(c, column);
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(open.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
};

}  // namespace

void enumerate_cubic(const CubicEnumerationConfig& config,
                     const std::function<void(const Graph&)>& emit) {
  if (config.n < 4 || config.n > kMaxEnumVertices || config.n % 2 != 0)
    throw std::invalid_argument(
        "enumerate_cubic: n must be even and in [4,16], got " +
        std::to_string(config.n));
  OrderlyEnumerator en;
  en.n = config.n;
  en.max_degree = 3;
  en.cubic_target = true;
  en.prune_disconnected = config.require_connected;
  std::function<void(const Graph&)> sink = [&](const Graph& g) {
    if (!is_cubic(g)) return;
    if (config.require_connected && !is_connected(g)) return;
    if (config.require_claw_free && !is_claw_free(g)) return;
    if (config.require_diamond_free && !find_diamonds(g).empty()) return;
    emit(g);
  };
  en.emit = &sink;
  en.run();
}

std::vector<Graph> enumerate_cubic_collect(const CubicEnumerationConfig& config) {
  std::vector<Graph> out;
  enumerate_cubic(config, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void enumerate_graphs(int n, int max_degree,
                      const std::function<void(const Graph&)>& emit) {
  if (n < 1 || n > kMaxEnumVertices)
    throw std::invalid_argument("enumerate_graphs: n must be in [1,16], got " +
                                std::to_string(n));
  OrderlyEnumerator en;
  en.n = n;
  en.max_degree = std::min(max_degree, n - 1);
  en.cubic_target = false;
  en.prune_disconnected = false;
  en.emit = &emit;
  en.run();
}

namespace {

// Depth-first search for the relabeling whose column-major adjacency
// bitstring is lexicographically minimal. Branches are pruned as soon as
// their determined prefix exceeds the best string found so far; swap-twin
// candidates are expanded once.
struct MinCanonicalSearch {
  const Graph& g;
  std::array<std::uint64_t, kMaxEnumVertices> adj{};
  std::array<int, kMaxEnumVertices> old_of{};
  std::uint64_t used = 0;
  std::vector<std::uint8_t> bits;       // bits of the current partial string
  std::vector<std::uint8_t> best_bits;  // full string of the best labeling
  std::array<int, kMaxEnumVertices> best_old_of{};
  bool have_best = false;

  explicit MinCanonicalSearch(const Graph& graph) : g(graph) {
    for (int v = 0; v < g.n; ++v) adj[v] = g.adj[v];
  }

  void dfs(int depth) {
    if (have_best) {
      // Prune when the determined prefix already exceeds the incumbent.
      for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] < best_bits[i]) break;
        if (bits[i] > best_bits[i]) return;
      }
    }
    if (depth == g.n) {
      if (!have_best ||
          std::lexicographical_compare(bits.begin(), bits.end(),
                                       best_bits.begin(), best_bits.end())) {
        best_bits = bits;
        best_old_of = old_of;
        have_best = true;
      }
      return;
    }
    // Candidates ordered by their column bits so the all-zero-leaning branch
    // (the likely minimum) is explored first.
    struct Cand {
      int u;
      std::uint32_t column;
    };
    std::vector<Cand> cands;
    for (int u = 0; u < g.n; ++u) {
      if (vs_has(used, u)) continue;
      std::uint32_t column = 0;
      for (int j = 0; j < depth; ++j)
        column = (column << 1) | (vs_has(adj[u], old_of[j]) ? 1 : 0);
      bool dup = false;
      for (const Cand& t : cands)
        if (t.column == column && swap_is_automorphism(adj, t.u, u)) {
          dup = true;
          break;
        }
      if (!dup) cands.push_back({u, column});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.column < b.column; });
    for (const Cand& cand : cands) {
      old_of[depth] = cand.u;
      used |= vs_bit(cand.u);
      for (int j = depth - 1; j >= 0; --j)
        bits.push_back((cand.column >> j) & 1);
      dfs(depth + 1);
      bits.resize(bits.size() - depth);
      used &= ~vs_bit(cand.u);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.n < 1 || g.n > kMaxEnumVertices)
    throw std::invalid_argument("canonical_graph: n must be in [1,16], got " +
                                std::to_string(g.n));
  MinCanonicalSearch search(g);
  search.dfs(0);
  // Rebuild the graph under the winning labeling: new label k = old vertex
  // best_old_of[k].
  std::array<int, kMaxEnumVertices> new_of{};
  for (int k = 0; k < g.n; ++k) new_of[search.best_old_of[k]] = k;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(new_of[u], new_of[v]);
  return from_edge_list(g.n, edges);
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

}  // namespace zfdom
