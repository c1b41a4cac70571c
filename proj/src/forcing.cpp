#include "zfdom/forcing.hpp"

#include <stdexcept>

namespace zfdom {

VertexSet closure_set(const Graph& g, VertexSet s) {
  const VertexSet all = vs_full(g.n);
  VertexSet blue = s;
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet scan = blue;
    while (scan) {
      int v = vs_min(scan);
      scan &= scan - 1;
      VertexSet white = g.adj[v] & ~blue;
      if (white && (white & (white - 1)) == 0) {  // exactly one white neighbor
        blue |= white;
        changed = true;
      }
    }
    if (blue == all) break;
  }
  return blue;
}

ForcingTrace closure(const Graph& g, VertexSet s) {
  ForcingTrace trace;
  trace.initial = s;
  VertexSet blue = s;
  bool changed = true;
  while (changed) {
    changed = false;
    // Lowest-index eligible forcer acts, then the scan restarts, so the step
    // log is a canonical sequence for the given seed.
    VertexSet scan = blue;
    while (scan) {
      int v = vs_min(scan);
      scan &= scan - 1;
      VertexSet white = g.adj[v] & ~blue;
      if (white && (white & (white - 1)) == 0) {
        int u = vs_min(white);
        blue |= white;
        trace.steps.emplace_back(v, u);
        changed = true;
        break;
      }
    }
  }
  trace.final_set = blue;
  return trace;
}

bool is_forcing_set(const Graph& g, VertexSet s) {
  return closure_set(g, s) == vs_full(g.n);
}

ZeroForcingResult zero_forcing_number(const Graph& g) {
  if (g.n > 20)
    throw std::invalid_argument(
        "zero_forcing_number: exact search limited to n <= 20, got " +
        std::to_string(g.n));
  const VertexSet all = vs_full(g.n);
  if (closure_set(g, 0) == all) return {0, 0};

  // Memo of closed non-full fixed points: any seed inside one of them closes
  // inside it too, so it cannot force. Capped to keep memory bounded.
  std::vector<VertexSet> failed;
  constexpr size_t kFailedCap = 1 << 16;

  // Enumerate k-subsets in lexicographic order of their sorted vertex lists
  // (standard combination stepping), so the first hit is the canonical
  // witness.
  std::vector<int> idx;
  for (int k = 1; k <= g.n; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet s = 0;
      for (int i : idx) s |= vs_bit(i);
      bool hopeless = false;
      for (const VertexSet f : failed)
        if ((s & ~f) == 0) {
          hopeless = true;
          break;
        }
      if (!hopeless) {
        VertexSet c = closure_set(g, s);
        if (c == all) return {k, s};
        if (failed.size() < kFailedCap) failed.push_back(c);
      }
      // Advance the combination.
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {g.n, all};  // unreachable: the full set always forces
}

ZExtension is_valid_z_extension(const Graph& g, VertexSet s, VertexSet s2) {
  if (vs_count(s) != vs_count(s2)) return ZExtension::not_valid;
  VertexSet c1 = closure_set(g, s);
  VertexSet c2 = closure_set(g, s2);
  if ((c1 & ~c2) != 0) return ZExtension::not_valid;
  return c1 == c2 ? ZExtension::valid : ZExtension::valid_proper;
}

}  // namespace zfdom
