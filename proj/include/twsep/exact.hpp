#pragma once

#include <functional>

#include "twsep/decomposition.hpp"
#include "twsep/elimination.hpp"
#include "twsep/graph.hpp"

namespace twsep {

inline constexpr int kDefaultExactLimit = 15;
// The subset table holds 2^n entries; larger limits are refused outright.
inline constexpr int kMaxExactVertices = 30;

struct ExactResult {
  int treewidth = -1;
  TreeDecomposition decomposition;
  EliminationOrdering ordering;
};

// Dynamic programming over the set of already-eliminated vertices:
//
//   best(S) = min over v in S of max(best(S - v), q(S - v, v))
//
// where q(S, v) counts vertices outside S + v reachable from v through S,
// i.e. v's degree at the moment it is eliminated after S. best(V) is the
// treewidth. Sets of equal size are independent, so each layer is
// evaluated in parallel. Throws SizeLimitError when |V| > limit.
ExactResult exact_treewidth(const Graph& g, int limit = kDefaultExactLimit);

// Same recurrence evaluated sequentially in increasing mask order. Kept as
// the reference the parallel kernel is tested and benchmarked against.
ExactResult exact_treewidth_serial(const Graph& g, int limit = kDefaultExactLimit);

// Treewidth evaluators plug into the bound computations. `exact` is true
// only when `width` is the treewidth rather than an upper bound.
struct WidthEstimate {
  int width = -1;
  TreeDecomposition decomposition;
  bool exact = true;
};

using TreewidthEvaluator = std::function<WidthEstimate(const Graph&)>;

TreewidthEvaluator exact_evaluator(int limit = kDefaultExactLimit);
TreewidthEvaluator greedy_evaluator();
// Exact up to `exact_threshold` vertices, min-degree greedy above.
TreewidthEvaluator threshold_evaluator(int exact_threshold);

}  // namespace twsep
