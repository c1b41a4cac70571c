#include "zfdom/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace zfdom {

namespace {

void check_guard(const Graph& g, const char* op) {
  if (g.n > 24)
    throw std::invalid_argument(std::string(op) +
                                ": exact search limited to n <= 24, got " +
                                std::to_string(g.n));
}

int max_closed_degree(const Graph& g) {
  int m = 1;
  for (int v = 0; v < g.n; ++v) m = std::max(m, g.degree(v) + 1);
  return m;
}

// Branch and bound for the minimum (independent) dominating set size: branch
// on an uncovered vertex with the fewest usable dominators; each dominator
// covers at most max|N[c]| vertices, giving the lower bound.
struct DominationSearch {
  const Graph& g;
  bool independent;
  int cover_cap;
  int best;

  explicit DominationSearch(const Graph& graph, bool indep)
      : g(graph), independent(indep), cover_cap(max_closed_degree(graph)),
        best(graph.n) {}

  void run(VertexSet chosen, VertexSet covered, VertexSet blocked, int size) {
    if (covered == vs_full(g.n)) {
      best = std::min(best, size);
      return;
    }
    int uncovered = g.n - vs_count(covered);
    if (size + (uncovered + cover_cap - 1) / cover_cap >= best) return;

    // Pick the uncovered vertex with the fewest candidate dominators.
    int pick = -1, pick_count = g.n + 1;
    VertexSet scan = vs_full(g.n) & ~covered;
    while (scan) {
      int v = vs_min(scan);
      scan &= scan - 1;
      int c = vs_count(g.closed_neighborhood(v) & ~blocked);
      if (c < pick_count) {
        pick = v;
        pick_count = c;
        if (c <= 1) break;
      }
    }
    if (pick_count == 0) return;  // vertex can no longer be dominated

    VertexSet candidates = g.closed_neighborhood(pick) & ~blocked;
    while (candidates) {
      int c = vs_min(candidates);
      candidates &= candidates - 1;
      VertexSet nblocked = blocked | vs_bit(c);
      if (independent) nblocked |= g.adj[c];
      run(chosen | vs_bit(c), covered | g.closed_neighborhood(c), nblocked,
          size + 1);
    }
  }
};

// Lexicographically first witness at the known optimal size: include-first
// depth-first scan over vertex indices, so the first full solution found is
// the canonical one.
struct WitnessSearch {
  const Graph& g;
  bool independent;
  int target;
  int cover_cap;
  VertexSet found = 0;
  bool done = false;

  WitnessSearch(const Graph& graph, bool indep, int size)
      : g(graph), independent(indep), target(size),
        cover_cap(max_closed_degree(graph)) {}

  void run(int next, VertexSet chosen, VertexSet covered, int size) {
    if (done) return;
    if (covered == vs_full(g.n)) {
      found = chosen;
      done = true;
      return;
    }
    if (next == g.n) return;
    int uncovered = g.n - vs_count(covered);
    if (size + (uncovered + cover_cap - 1) / cover_cap > target) return;
    // Every uncovered vertex must still have a potential dominator at an
    // index >= next.
    VertexSet suffix = vs_full(g.n) & ~vs_full(next);
    VertexSet scan = vs_full(g.n) & ~covered;
    while (scan) {
      int v = vs_min(scan);
      scan &= scan - 1;
      VertexSet cands = g.closed_neighborhood(v) & suffix;
      if (independent) cands &= ~chosen_neighbors(chosen);
      if (!cands) return;
    }
    bool can_take = size < target &&
                    (!independent || (g.adj[next] & chosen) == 0);
    if (can_take)
      run(next + 1, chosen | vs_bit(next),
          covered | g.closed_neighborhood(next), size + 1);
    run(next + 1, chosen, covered, size);
  }

  VertexSet chosen_neighbors(VertexSet chosen) const {
    VertexSet nb = 0;
    VertexSet scan = chosen;
    while (scan) {
      int v = vs_min(scan);
      scan &= scan - 1;
      nb |= g.adj[v];
    }
    return nb;
  }
};

// Maximum independent set size by branching on the first available vertex.
int mis_size(const Graph& g, VertexSet available, int have, int& best) {
  if (!available) {
    best = std::max(best, have);
    return best;
  }
  if (have + vs_count(available) <= best) return best;
  int v = vs_min(available);
  mis_size(g, available & ~g.closed_neighborhood(v), have + 1, best);
  mis_size(g, available & ~vs_bit(v), have, best);
  return best;
}

// Lexicographically first independent set of exactly the target size.
bool mis_witness(const Graph& g, int next, VertexSet chosen, int size,
                 int target, VertexSet& out) {
  if (size == target) {
    out = chosen;
    return true;
  }
  if (next == g.n || size + (g.n - next) < target) return false;
  if ((g.adj[next] & chosen) == 0 &&
      mis_witness(g, next + 1, chosen | vs_bit(next), size + 1, target, out))
    return true;
  return mis_witness(g, next + 1, chosen, size, target, out);
}

}  // namespace

DominationWitness domination_number(const Graph& g) {
  check_guard(g, "domination_number");
  DominationSearch search(g, false);
  search.run(0, 0, 0, 0);
  WitnessSearch w(g, false, search.best);
  w.run(0, 0, 0, 0);
  return {search.best, w.found, WitnessKind::dominating};
}

DominationWitness independent_domination_number(const Graph& g) {
  check_guard(g, "independent_domination_number");
  DominationSearch search(g, true);
  search.run(0, 0, 0, 0);
  WitnessSearch w(g, true, search.best);
  w.run(0, 0, 0, 0);
  return {search.best, w.found, WitnessKind::independent_dominating};
}

DominationWitness independence_number(const Graph& g) {
  check_guard(g, "independence_number");
  int best = 0;
  mis_size(g, vs_full(g.n), 0, best);
  VertexSet witness = 0;
  mis_witness(g, 0, 0, 0, best, witness);
  return {best, witness, WitnessKind::independent};
}

}  // namespace zfdom
