#include "zfdom/certify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace zfdom {

int ColorState::unit_level(int unit_index) const {
  return vs_count(partition.units[unit_index].members & blue());
}

bool ColorState::did_force(int v) const {
  for (auto [forcer, forced] : trace.steps)
    if (forcer == v) return true;
  return false;
}

namespace {

// The unique neighbor of v outside its (triangle) unit.
int cross_neighbor(const Graph& g, const DeltaDPartition& p, int v) {
  VertexSet outside = g.adj[v] & ~p.units[p.unit_of[v]].members;
  if (vs_count(outside) != 1)
    throw std::runtime_error("unit vertex " + std::to_string(v) +
                             " does not have exactly one outside neighbor");
  return vs_min(outside);
}

// The unit's member of the dominating set, or -1.
int unit_dominator(const DeltaDPartition& p, VertexSet x, int unit_index) {
  VertexSet d = p.units[unit_index].members & x;
  return d ? vs_min(d) : -1;
}

std::vector<int> path_order(const Graph& g, const YComponent& comp) {
  VertexSet members = 0;
  for (int v : comp.vertices) members |= vs_bit(v);
  int start = -1;
  for (int v : comp.vertices)
    if (vs_count(g.adj[v] & members) == 1) {
      start = v;
      break;  // vertices are sorted, so this is the smaller endpoint
    }
  if (start == -1)
    throw std::runtime_error("path component without an endpoint");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    VertexSet next = g.adj[cur] & members;
    if (prev != -1) next &= ~vs_bit(prev);
    if (!next) break;
    prev = cur;
    cur = vs_min(next);
    order.push_back(cur);
  }
  if (order.size() != comp.vertices.size())
    throw std::runtime_error("path component is not a simple path");
  return order;
}

// Ring order of a cycle component: start at its smallest vertex, step first
// to the pair partner inside the same unit, then keep walking away from the
// previous vertex. Consecutive pairs (2i, 2i+1) then share a unit.
std::vector<int> ring_order(const Graph& g, const DeltaDPartition& p,
                            const YComponent& comp) {
  VertexSet members = 0;
  for (int v : comp.vertices) members |= vs_bit(v);
  int s = comp.vertices.front();
  VertexSet mates = g.adj[s] & members & p.units[p.unit_of[s]].members;
  if (vs_count(mates) != 1)
    throw std::runtime_error(
        "cycle component vertex lacks a unique in-unit partner");
  std::vector<int> ring{s, vs_min(mates)};
  while (true) {
    int cur = ring.back(), prev = ring[ring.size() - 2];
    VertexSet next = g.adj[cur] & members & ~vs_bit(prev);
    if (vs_count(next) != 1)
      throw std::runtime_error("cycle component walk is not 2-regular");
    int v = vs_min(next);
    if (v == s) break;
    ring.push_back(v);
  }
  if (ring.size() != comp.vertices.size() || ring.size() % 2 != 0)
    throw std::runtime_error("cycle component does not pair up into units");
  for (size_t i = 0; i < ring.size(); i += 2)
    if (p.unit_of[ring[i]] != p.unit_of[ring[i + 1]])
      throw std::runtime_error("cycle component pairs straddle units");
  return ring;
}

const YComponent& component_of(const std::vector<YComponent>& comps, int v) {
  for (const YComponent& c : comps)
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), v)) return c;
  throw std::runtime_error("vertex " + std::to_string(v) +
                           " is not in any component of G[Y]");
}

ColorState make_state(const Graph& g, const DeltaDPartition& p, VertexSet x,
                      VertexSet seed, InitializationMode mode) {
  ColorState st;
  st.g = &g;
  st.partition = p;
  st.x = x;
  st.seed = seed;
  st.trace = closure(g, seed);
  st.mode = mode;
  return st;
}

void require_units_full(const ColorState& st, VertexSet component_members,
                        const char* what) {
  for (size_t ui = 0; ui < st.partition.units.size(); ++ui) {
    const Unit& u = st.partition.units[ui];
    if ((u.members & component_members) == 0) continue;
    if (vs_count(u.members & st.blue()) != 3)
      throw std::runtime_error(std::string(what) +
                               " left a touched unit partially blue");
  }
}

// Largest component first, ties by lexicographically smaller vertex list.
bool component_preferred(const YComponent& a, const YComponent& b) {
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() > b.vertices.size();
  return a.vertices < b.vertices;
}

void apply_swap(ColorState& st, int rule, int removed, int added,
                RuleApplication& out) {
  if (!vs_has(st.seed, removed) || vs_has(st.seed, added) ||
      vs_has(st.blue(), added))
    throw std::runtime_error("rule " + std::to_string(rule) +
                             " selected an invalid swap (-" +
                             std::to_string(removed) + ", +" +
                             std::to_string(added) + ")");
  VertexSet next = (st.seed & ~vs_bit(removed)) | vs_bit(added);
  if (is_valid_z_extension(*st.g, st.seed, next) != ZExtension::valid_proper)
    throw std::runtime_error(
        "rule " + std::to_string(rule) + " swap (-" + std::to_string(removed) +
        ", +" + std::to_string(added) + ") is not a proper extension");
  st.seed = next;
  st.trace = closure(*st.g, next);
  if ((st.x & ~st.blue()) != 0)
    throw std::runtime_error("dominating set left the closure after rule " +
                             std::to_string(rule));
  out = RuleApplication{rule, removed, added};
}

// A unit is pending when its only blue vertex is its own dominator, already
// swapped out of the seed and re-forced; rules 3 and 4 resolve these.
bool unit_pending(const ColorState& st, int ui) {
  if (st.unit_level(ui) != 1) return false;
  int dom = unit_dominator(st.partition, st.x, ui);
  if (dom == -1) return false;
  const Unit& u = st.partition.units[ui];
  return (u.members & st.blue()) == vs_bit(dom) && !vs_has(st.seed, dom);
}

bool any_unit_pending(const ColorState& st) {
  for (size_t ui = 0; ui < st.partition.units.size(); ++ui)
    if (unit_pending(st, static_cast<int>(ui))) return true;
  return false;
}

bool try_rule1(ColorState& st, RuleApplication& out) {
  const Graph& g = *st.g;
  for (size_t ui = 0; ui < st.partition.units.size(); ++ui) {
    const Unit& u = st.partition.units[ui];
    if (st.unit_level(static_cast<int>(ui)) != 1) continue;
    int b = vs_min(u.members & st.blue());
    if (!vs_has(st.seed, b)) continue;
    int partner = cross_neighbor(g, st.partition, b);
    if (!vs_has(st.blue(), partner)) continue;
    if (st.unit_level(st.partition.unit_of[partner]) != 3) continue;
    if (st.did_force(partner)) continue;
    int added = vs_min(u.members & ~st.blue());
    apply_swap(st, 1, b, added, out);
    return true;
  }
  return false;
}

bool try_rule2(ColorState& st, RuleApplication& out) {
  if (any_unit_pending(st)) return false;  // rules 3/4 must clear first
  const Graph& g = *st.g;
  for (size_t ui = 0; ui < st.partition.units.size(); ++ui) {
    const Unit& u = st.partition.units[ui];
    if (st.unit_level(static_cast<int>(ui)) != 1) continue;
    if ((u.members & st.x) != 0) continue;  // only dominator-free units
    int bz = vs_min(u.members & st.blue());
    if (vs_has(st.seed, bz)) continue;  // must have been forced from outside
    VertexSet whites = u.members & ~st.blue();
    int w1 = vs_min(whites);
    int w2 = vs_min(whites & (whites - 1));
    int d1 = cross_neighbor(g, st.partition, w1);
    int d2 = cross_neighbor(g, st.partition, w2);
    if (!vs_has(st.x, d1) || !vs_has(st.x, d2))
      throw std::runtime_error(
          "dominator-free unit with a white vertex not dominated from "
          "outside");
    if (d1 == d2)
      throw std::runtime_error(
          "two whites of a dominator-free unit share an outside dominator");
    if (vs_has(st.seed, d2)) {
      apply_swap(st, 2, d2, w1, out);
      return true;
    }
    if (vs_has(st.seed, d1)) {
      apply_swap(st, 2, d1, w2, out);
      return true;
    }
  }
  return false;
}

// Shared candidate selection for rules 3 and 4: dominators still in the
// seed, preferring one whose outside neighbor has not yet forced (removing a
// dominator whose partner already forced can strand a later rule-1 swap).
int pick_removal(const ColorState& st, const std::vector<int>& candidates) {
  for (int d : candidates)
    if (vs_has(st.seed, d) &&
        !st.did_force(cross_neighbor(*st.g, st.partition, d)))
      return d;
  for (int d : candidates)
    if (vs_has(st.seed, d)) return d;
  return -1;
}

bool try_rule34(ColorState& st, bool cycle_rule, RuleApplication& out) {
  const Graph& g = *st.g;
  std::vector<YComponent> comps = y_components(g, st.x);
  for (size_t ui = 0; ui < st.partition.units.size(); ++ui) {
    if (!unit_pending(st, static_cast<int>(ui))) continue;
    const Unit& u = st.partition.units[ui];
    VertexSet whites = u.members & ~st.blue();
    const YComponent& comp = component_of(comps, vs_min(whites));
    if (comp.is_cycle != cycle_rule) continue;
    std::vector<int> candidates;
    if (!cycle_rule) {
      // Rule 3: remove the outside dominator of the far end of the path
      // (oriented from its smaller endpoint), falling back to the near end.
      std::vector<int> order = path_order(g, comp);
      int far = cross_neighbor(g, st.partition, order.back());
      int near = cross_neighbor(g, st.partition, order.front());
      if (!vs_has(st.x, far) || !vs_has(st.x, near))
        throw std::runtime_error(
            "path component endpoint not dominated from outside");
      candidates = {far, near};
    } else {
      // Rule 4: remove the dominator of some other unit on the ring.
      std::vector<int> ring = ring_order(g, st.partition, comp);
      for (size_t i = 0; i < ring.size(); i += 2) {
        int other = st.partition.unit_of[ring[i]];
        if (other == static_cast<int>(ui)) continue;
        int dom = unit_dominator(st.partition, st.x, other);
        if (dom == -1)
          throw std::runtime_error("ring unit without a dominator");
        candidates.push_back(dom);
      }
      std::sort(candidates.begin(), candidates.end());
    }
    int removed = pick_removal(st, candidates);
    if (removed == -1)
      throw std::runtime_error(
          std::string(cycle_rule ? "rule 4" : "rule 3") +
          ": no removable dominator remains in the seed");
    apply_swap(st, cycle_rule ? 4 : 3, removed, vs_min(whites), out);
    return true;
  }
  return false;
}

void validate_dominating_independent(const Graph& g, VertexSet x) {
  VertexSet covered = 0;
  VertexSet scan = x;
  while (scan) {
    int v = vs_min(scan);
    scan &= scan - 1;
    covered |= g.closed_neighborhood(v);
    if (g.adj[v] & x)
      throw std::invalid_argument("certificate: x is not independent");
  }
  if (covered != vs_full(g.n))
    throw std::invalid_argument("certificate: x is not dominating");
}

}  // namespace

std::vector<YComponent> y_components(const Graph& g, VertexSet x) {
  std::vector<YComponent> comps;
  VertexSet remaining = vs_full(g.n) & ~x;
  while (remaining) {
    int start = vs_min(remaining);
    VertexSet comp = vs_bit(start), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      while (frontier) {
        int v = vs_min(frontier);
        frontier &= frontier - 1;
        next |= g.adj[v] & remaining & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    YComponent yc;
    yc.vertices = vs_to_vector(comp);
    yc.is_cycle = true;
    for (int v : yc.vertices)
      if (vs_count(g.adj[v] & comp) != 2) yc.is_cycle = false;
    comps.push_back(std::move(yc));
    remaining &= ~comp;
  }
  return comps;
}

ColorState path_initialization(const Graph& g, const DeltaDPartition& p,
                               VertexSet x) {
  std::vector<YComponent> comps = y_components(g, x);
  const YComponent* best = nullptr;
  for (const YComponent& c : comps)
    if (!c.is_cycle && (!best || component_preferred(c, *best))) best = &c;
  if (!best)
    throw std::invalid_argument(
        "path_initialization: G[Y] has no path component");
  std::vector<int> order = path_order(g, *best);
  ColorState st =
      make_state(g, p, x, x | vs_bit(order.front()), InitializationMode::path);
  VertexSet members = 0;
  for (int v : best->vertices) members |= vs_bit(v);
  require_units_full(st, members, "path initialization");
  return st;
}

ColorState cycle_initialization(const Graph& g, const DeltaDPartition& p,
                                VertexSet x) {
  std::vector<YComponent> comps = y_components(g, x);
  const YComponent* best = nullptr;
  for (const YComponent& c : comps) {
    if (!c.is_cycle)
      throw std::invalid_argument(
          "cycle_initialization: G[Y] has a path component; use "
          "path_initialization");
    if (!best || component_preferred(c, *best)) best = &c;
  }
  if (!best)
    throw std::runtime_error("cycle_initialization: G[Y] is empty");
  if (best->vertices.size() < 4)
    throw std::runtime_error(
        "cycle_initialization: largest cycle is a dominator-free triangle");
  std::vector<int> ring = ring_order(g, p, *best);
  int s = ring[0], mate = ring[1];
  int first_unit = p.unit_of[s];
  int last_unit = p.unit_of[ring.back()];
  if (first_unit == last_unit)
    throw std::runtime_error("cycle_initialization: ring spans a single unit");
  int dom_last = unit_dominator(p, x, last_unit);
  if (dom_last == -1)
    throw std::runtime_error("cycle_initialization: last ring unit has no "
                             "dominator");
  VertexSet seed = (x & ~vs_bit(dom_last)) | vs_bit(s) | vs_bit(mate);
  ColorState st = make_state(g, p, x, seed, InitializationMode::cycle);
  VertexSet members = 0;
  for (int v : best->vertices) members |= vs_bit(v);
  require_units_full(st, members, "cycle initialization");
  if (!vs_has(st.blue(), dom_last))
    throw std::runtime_error(
        "cycle initialization failed to re-force the removed dominator");
  return st;
}

bool apply_extension_rule(ColorState& state, int rule_id, RuleApplication& out) {
  switch (rule_id) {
    case 1:
      return try_rule1(state, out);
    case 2:
      return try_rule2(state, out);
    case 3:
      return try_rule34(state, false, out);
    case 4:
      return try_rule34(state, true, out);
    default:
      throw std::invalid_argument("apply_extension_rule: rule_id must be 1..4");
  }
}

CertificateLog run_scheduler(const Graph& g, VertexSet x) {
  validate_dominating_independent(g, x);
  DeltaDPartition p = delta_d_partition(g);
  for (const Unit& u : p.units)
    if (u.kind != UnitKind::triangle)
      throw std::invalid_argument(
          "run_scheduler: graph has a diamond unit; certificates require a "
          "diamond-free graph");

  CertificateLog log;
  log.dominating_set = x;
  std::optional<ColorState> state;
  try {
    bool has_path = false;
    for (const YComponent& c : y_components(g, x))
      if (!c.is_cycle) has_path = true;
    state = has_path ? path_initialization(g, p, x)
                     : cycle_initialization(g, p, x);
    log.initial_mode = state->mode;
    log.initial_set = state->seed;

    const VertexSet all = vs_full(g.n);
    int limit = 4 * g.n + 8;
    while (state->blue() != all) {
      if (--limit < 0)
        throw std::runtime_error("scheduler exceeded its iteration limit");
      RuleApplication ra;
      if (apply_extension_rule(*state, 1, ra) ||
          apply_extension_rule(*state, 3, ra) ||
          apply_extension_rule(*state, 4, ra) ||
          apply_extension_rule(*state, 2, ra)) {
        log.rule_applications.push_back(ra);
        continue;
      }
      throw std::runtime_error("no extension rule applies; forcing is stuck");
    }
    if (vs_count(state->seed) != vs_count(x) + 1)
      throw std::runtime_error("final seed size is not |x| + 1");
    log.verified = true;
  } catch (const std::runtime_error& e) {
    log.verified = false;
    log.failure_reason = e.what();
    if (state) log.stuck_blue = state->blue();
  }
  if (state) {
    log.final_set = state->seed;
    log.final_trace = state->trace;
  }
  return log;
}

CertificateLog build_two_factor_certificate(const Graph& g,
                                            const DominationWitness& x) {
  return run_scheduler(g, x.set);
}

CertificateLog build_two_factor_certificate(const Graph& g) {
  return run_scheduler(g, independent_domination_number(g).set);
}

}  // namespace zfdom
