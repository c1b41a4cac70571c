#pragma once

// Exact domination-type invariants: domination number (gamma), independent
// domination number (i), and independence number (alpha), each with a
// lexicographically first witness set.

#include "zfdom/graph.hpp"

namespace zfdom {

enum class WitnessKind { dominating, independent_dominating, independent };

struct DominationWitness {
  int number = 0;
  VertexSet set = 0;  // lexicographically first optimal witness
  WitnessKind kind = WitnessKind::dominating;
};

// Smallest set whose closed neighborhoods cover V. Branch and bound on an
// uncovered vertex, then a lexicographic re-search at the optimal size for
// the canonical witness. Guarded to n <= 24.
DominationWitness domination_number(const Graph& g);

// Smallest dominating set that is also independent. Always exists (any
// maximal independent set dominates). Guarded to n <= 24.
DominationWitness independent_domination_number(const Graph& g);

// Largest independent set. Guarded to n <= 24.
DominationWitness independence_number(const Graph& g);

}  // namespace zfdom
