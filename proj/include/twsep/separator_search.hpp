#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "twsep/exact.hpp"
#include "twsep/graph.hpp"

namespace twsep {

enum class CandidateSource { kVertexCut, kBfsLevel, kNeighborhood, kUser };

std::string_view to_string(CandidateSource source);

struct SeparatorCandidate {
  VertexSet separator;
  int score = 0;  // components bound under the cheap evaluator
  CandidateSource source = CandidateSource::kUser;
};

// Minimum a-b vertex separator via unit vertex capacities on a split graph
// and shortest augmenting paths. The cut returned is the one closest to `a`.
// Empty when a and b already lie in different components. Throws
// AdjacentPairError when a == b or a and b are adjacent.
VertexSet min_vertex_cut(const Graph& g, Vertex a, Vertex b);

// Exact up to 12 vertices, min-degree greedy above.
TreewidthEvaluator default_cheap_evaluator();

// The components bound of (g, s) under `cheap`. Lower is better.
int score(const Graph& g, const VertexSet& s, const TreewidthEvaluator& cheap);

SeparatorCandidate user_candidate(const Graph& g, const VertexSet& s,
                                  const TreewidthEvaluator& cheap);

// Candidate separators drawn from minimum cuts between non-adjacent pairs,
// BFS level sets and open/closed neighbourhoods, each verified to leave at
// least two components. Pairs and roots are exhaustive up to 30 vertices
// and sampled with `seed` above that. The best `budget` candidates are
// returned ordered by (score, separator). NoSeparatorError on a clique.
std::vector<SeparatorCandidate> enumerate_candidates(
    const Graph& g, std::size_t budget, std::uint64_t seed = 0,
    const TreewidthEvaluator& cheap = default_cheap_evaluator());

}  // namespace twsep
