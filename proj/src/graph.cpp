#include "zfdom/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace zfdom {

std::vector<int> vs_to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = vs_min(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

std::string vs_to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vs_to_vector(s)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("from_edge_list: n must be in [1,64], got " +
                                std::to_string(n));
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("from_edge_list: endpoint out of range in (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    if (u == v)
      throw std::invalid_argument("from_edge_list: loop at vertex " +
                                  std::to_string(u));
    if (g.has_edge(u, v))
      throw std::invalid_argument("from_edge_list: duplicate edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    g.adj[u] |= vs_bit(v);
    g.adj[v] |= vs_bit(u);
  }
  return g;
}

// Column-major index of the upper-triangle cell (u,v), u < v: all cells of
// columns < v, then row u. This is the bit order graph6 uses.
static int triangle_index(int u, int v) { return v * (v - 1) / 2 + u; }

Graph parse_graph6(const std::string& text) {
  // Strip a trailing newline and an optional ">>graph6<<" prefix.
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  const std::string prefix = ">>graph6<<";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  if (s.empty()) throw std::runtime_error("parse_graph6: empty input");
  int header = static_cast<unsigned char>(s[0]);
  if (header == 126)
    throw std::runtime_error("parse_graph6: long form (n > 62) not supported");
  int n = header - 63;
  if (n < 0 || n > 62)
    throw std::runtime_error("parse_graph6: bad header byte " +
                             std::to_string(header));
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + nbytes)
    throw std::runtime_error("parse_graph6: expected " +
                             std::to_string(1 + nbytes) + " bytes, got " +
                             std::to_string(s.size()));
  Graph g;
  g.n = n == 0 ? 0 : n;
  g.adj.assign(std::max(n, 0), 0);
  for (int i = 0; i < nbits; ++i) {
    int byte = static_cast<unsigned char>(s[1 + i / 6]) - 63;
    if (byte < 0 || byte > 63)
      throw std::runtime_error("parse_graph6: byte out of range");
    // Bits fill each 6-bit group most significant first.
    if ((byte >> (5 - i % 6)) & 1) {
      // Invert triangle_index: find (u,v) with v*(v-1)/2 + u == i.
      int v = 1;
      while (triangle_index(0, v + 1) <= i) ++v;
      int u = i - triangle_index(0, v);
      g.adj[u] |= vs_bit(v);
      g.adj[v] |= vs_bit(u);
    }
  }
  // Validate padding bits of the final byte are zero.
  if (nbits % 6 != 0) {
    int last = static_cast<unsigned char>(s.back()) - 63;
    int pad = 6 - nbits % 6;
    if (last & ((1 << pad) - 1))
      throw std::runtime_error("parse_graph6: nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.n < 1 || g.n > 62)
    throw std::invalid_argument("write_graph6: n must be in [1,62], got " +
                                std::to_string(g.n));
  int nbits = g.n * (g.n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::string out(1 + nbytes, char(63));
  out[0] = static_cast<char>(63 + g.n);
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u)
      if (g.has_edge(u, v)) {
        int i = triangle_index(u, v);
        out[1 + i / 6] += static_cast<char>(1 << (5 - i % 6));
      }
  return out;
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  VertexSet seen = vs_bit(0);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = vs_min(frontier);
      frontier &= frontier - 1;
      next |= g.adj[v] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == vs_full(g.n);
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nb = vs_to_vector(g.adj[v]);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        // nb[i], nb[j] nonadjacent; a third mutually nonadjacent neighbor
        // completes a claw centered at v.
        VertexSet rest = g.adj[v] & ~g.adj[nb[i]] & ~g.adj[nb[j]] &
                         ~vs_bit(nb[i]) & ~vs_bit(nb[j]);
        if (rest) return false;
      }
  }
  return true;
}

std::vector<VertexSet> find_diamonds(const Graph& g) {
  std::vector<VertexSet> out;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        for (int d = c + 1; d < g.n; ++d) {
          int edges = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(a, d) +
                      g.has_edge(b, c) + g.has_edge(b, d) + g.has_edge(c, d);
          if (edges == 5) out.push_back(vs_bit(a) | vs_bit(b) | vs_bit(c) | vs_bit(d));
        }
  return out;
}

}  // namespace zfdom
