#pragma once

// Constructive zero-forcing certificates for connected cubic claw-free
// diamond-free graphs (other than K4). Given a minimum independent
// dominating set X, the builder seeds X plus one extra vertex, runs the
// forcing closure, and repairs stuck states with size-preserving swap rules;
// every swap is checked to properly extend the previous seed's closure. On
// success the final seed is a verified forcing set of size |X| + 1 — a
// constructive witness that Z(G) <= gamma(G) + 1 on this graph family.
//
// The builder never silently guesses: structural expectations that fail at
// run time surface as verified=false with a reason and the stuck closure,
// which is a reportable finding rather than a crash.

#include <string>
#include <vector>

#include "zfdom/domination.hpp"
#include "zfdom/forcing.hpp"
#include "zfdom/graph.hpp"
#include "zfdom/structure.hpp"

namespace zfdom {

enum class InitializationMode { path, cycle };

struct ColorState {
  const Graph* g = nullptr;
  DeltaDPartition partition;
  VertexSet x = 0;     // the fixed dominating set (never changes)
  VertexSet seed = 0;  // current candidate forcing set S
  ForcingTrace trace;  // closure of the current seed
  InitializationMode mode = InitializationMode::path;

  VertexSet blue() const { return trace.final_set; }
  int unit_level(int unit_index) const;  // blue vertices inside the unit
  bool did_force(int v) const;           // v acted as a forcer in the trace
};

struct RuleApplication {
  int rule = 0;  // 1..4
  int removed = -1;
  int added = -1;
};

struct CertificateLog {
  InitializationMode initial_mode = InitializationMode::path;
  VertexSet dominating_set = 0;
  VertexSet initial_set = 0;
  std::vector<RuleApplication> rule_applications;
  VertexSet final_set = 0;
  ForcingTrace final_trace;
  bool verified = false;
  std::string failure_reason;  // empty iff verified
  VertexSet stuck_blue = 0;    // closure at the point of failure (diagnostic)
};

// Connected components of the graph induced on Y = V \ X. Because X
// dominates and every Y vertex keeps at most two Y neighbors, each component
// is a path or a cycle.
struct YComponent {
  bool is_cycle = false;
  std::vector<int> vertices;  // sorted
};
std::vector<YComponent> y_components(const Graph& g, VertexSet x);

// Seed X plus one endpoint of a largest path component of G[Y]; the closure
// then swallows every unit that component touches. Throws
// std::invalid_argument when G[Y] has no path component.
ColorState path_initialization(const Graph& g, const DeltaDPartition& p, VertexSet x);

// When G[Y] is all cycles: seed X minus the dominator of the last ring unit,
// plus the adjacent pair of the first ring unit of a largest cycle
// component. Throws std::invalid_argument when a path component exists;
// throws std::runtime_error when the largest cycle has no usable structure.
ColorState cycle_initialization(const Graph& g, const DeltaDPartition& p, VertexSet x);

// Attempts one application of the given swap rule (1..4) at the
// lexicographically first matching position. Returns false when the rule's
// pattern is absent. A matched swap that fails the proper-extension check
// throws std::runtime_error. Rules:
//   1: a unit touching a finished unit through an edge whose endpoints are
//      both blue trades its seeded blue vertex for a white one.
//   2: a unit with no dominator whose blue vertex was forced from outside
//      trades the dominator of one white for the other white. Blocked while
//      any unit is still waiting on rule 3/4.
//   3: a unit whose swapped-out dominator was re-forced, with its white pair
//      on a path component, trades the far path end's outside dominator for
//      one of its whites.
//   4: same trigger with the white pair on a cycle component; the dominator
//      of another ring unit is traded away.
bool apply_extension_rule(ColorState& state, int rule_id, RuleApplication& out);

// Full pipeline: unit partition, initialization, rule loop, verification.
// x must be an independent dominating set (std::invalid_argument otherwise);
// structural failures en route are reported in the log, not thrown.
CertificateLog run_scheduler(const Graph& g, VertexSet x);

CertificateLog build_two_factor_certificate(const Graph& g,
                                            const DominationWitness& x);
CertificateLog build_two_factor_certificate(const Graph& g);

}  // namespace zfdom
