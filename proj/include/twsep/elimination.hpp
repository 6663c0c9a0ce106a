#pragma once

#include <vector>

#include "twsep/decomposition.hpp"
#include "twsep/graph.hpp"

namespace twsep {

// Vertex labels in elimination order.
struct EliminationOrdering {
  std::vector<Vertex> order;
};

// Throws PermutationError unless `o` lists every vertex of `g` exactly once.
void require_permutation(const Graph& g, const EliminationOrdering& o);

// Maximum number of not-yet-eliminated neighbours a vertex has when it is
// eliminated (eliminating connects those neighbours pairwise). -1 on the
// empty graph.
int width_of_ordering(const Graph& g, const EliminationOrdering& o);

// One bag per vertex: the vertex plus its later neighbours in the filled
// graph. Width equals width_of_ordering(g, o).
TreeDecomposition decomposition_from_ordering(const Graph& g, const EliminationOrdering& o);

// Greedy: always eliminate a vertex of minimum current degree, lowest label
// first on ties.
EliminationOrdering min_degree_ordering(const Graph& g);

}  // namespace twsep
