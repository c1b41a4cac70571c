#pragma once

// Structural decomposition of connected cubic claw-free graphs. Every such
// graph other than K4 partitions uniquely into vertex-disjoint units: rings
// of four vertices inducing a diamond (two outgoing edges) and triangles
// (three outgoing edges). Contracting each unit to a point yields a cubic
// multigraph; when every unit is a triangle this is the contraction
// multigraph used by the certificate builder.

#include <utility>
#include <vector>

#include "zfdom/graph.hpp"

namespace zfdom {

enum class UnitKind { triangle, diamond };

struct Unit {
  UnitKind kind = UnitKind::triangle;
  VertexSet members = 0;
  // Diamond roles: a and b are the nonadjacent pair (each with exactly one
  // neighbor outside the unit, a < b), c and d the adjacent pair (c < d).
  // Triangles leave all four at -1.
  int a = -1, b = -1, c = -1, d = -1;
};

struct DeltaDPartition {
  std::vector<Unit> units;
  std::vector<int> unit_of;  // vertex -> index into units
  // Multiset of unit adjacencies, one entry per cross edge, as (i,j) with
  // i < j, sorted; parallel unit pairs appear once per edge.
  std::vector<std::pair<int, int>> unit_adjacency;
};

// Computes the unit partition. Throws std::invalid_argument when g is not
// connected cubic claw-free, when g is K4 (no unit partition exists), or
// when the structure is inconsistent (overlapping diamonds, leftover
// vertices not in a unique triangle).
DeltaDPartition delta_d_partition(const Graph& g);

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i,j) with i < j, sorted, loop-free
};

// The contraction multigraph of an all-triangle partition. Throws
// std::invalid_argument if any unit is a diamond.
Multigraph contraction_multigraph(const DeltaDPartition& p);

// Builds the diamond Unit (with roles) for a 4-subset of vertices inducing
// exactly five edges; throws std::invalid_argument otherwise.
Unit make_diamond_unit(const Graph& g, VertexSet members);

// Diamond surgery: remove the diamond's four vertices and join the outside
// neighbors e (of a) and f (of b) by a new edge, relabeling the remaining
// vertices in order. Requires a and b to have exactly one outside neighbor
// each (true in cubic graphs); throws std::invalid_argument when e and f
// coincide or are already adjacent (the contraction is undefined there).
Graph contract_diamond(const Graph& g, const Unit& d);
Graph contract_diamond(const Graph& g, VertexSet diamond_members);

}  // namespace zfdom
