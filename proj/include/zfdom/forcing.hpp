#pragma once

// Zero forcing: start from a blue seed set; whenever a blue vertex has
// exactly one white neighbor it forces that neighbor blue; repeat to a fixed
// point. The zero forcing number Z(G) is the size of a smallest seed whose
// fixed point is the whole vertex set.

#include <utility>
#include <vector>

#include "zfdom/graph.hpp"

namespace zfdom {

struct ForcingTrace {
  VertexSet initial = 0;
  // Applied forces in order, as (forcer, forced). The order is deterministic:
  // at each step the lowest-index blue vertex able to force acts first.
  std::vector<std::pair<int, int>> steps;
  VertexSet final_set = 0;
};

// Fixed point only, no step log; batched bitmask passes.
VertexSet closure_set(const Graph& g, VertexSet s);

// Fixed point plus the deterministic step log.
ForcingTrace closure(const Graph& g, VertexSet s);

bool is_forcing_set(const Graph& g, VertexSet s);

struct ZeroForcingResult {
  int number = 0;
  VertexSet witness = 0;  // lexicographically first optimal seed
};

// Exact Z(G) by subset search in increasing size, with a memo of failed
// closures used to prune subsets of already-failed fixed points. Guarded to
// n <= 20; throws std::invalid_argument beyond that.
ZeroForcingResult zero_forcing_number(const Graph& g);

// Relation between two candidate seeds of equal size: s2 extends s ("valid")
// when closure(s) is contained in closure(s2), properly when the containment
// is strict. Used to check that certificate swap steps never lose ground.
enum class ZExtension { not_valid, valid, valid_proper };
ZExtension is_valid_z_extension(const Graph& g, VertexSet s, VertexSet s2);

}  // namespace zfdom
