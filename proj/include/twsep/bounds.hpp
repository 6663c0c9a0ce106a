#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twsep/decomposition.hpp"
#include "twsep/exact.hpp"
#include "twsep/graph.hpp"

namespace twsep {

// Components of g - s, each paired with the vertices of s that have a
// neighbour in it. Index-aligned; components ordered by smallest member.
struct ComponentSplit {
  std::vector<VertexSet> components;
  std::vector<VertexSet> attachment_sets;
};

ComponentSplit attachment_sets(const Graph& g, const VertexSet& s);

// Result of filling in every non-adjacent pair that shares an attachment
// set. The augmented separator graph H_S has vertex set S and edges
// E(G[S]) plus the fill edges; each attachment set is a clique in it.
struct FillInResult {
  VertexSet separator;
  std::vector<VertexSet> components;
  std::vector<VertexSet> attachment_sets;
  std::vector<Edge> fill_edges;  // sorted, none of them an edge of G
  Graph augmented_separator_graph;
};

FillInResult fill_in(const Graph& g, const VertexSet& s);

// G with the fill edges added (H in the construction).
Graph augmented_graph(const Graph& g, const FillInResult& fill);

enum class SubMethod { kExact, kBounded };

struct ComponentTerm {
  std::size_t index = 0;
  std::size_t attachment_size = 0;
  int width = -1;  // treewidth of the component, or an upper bound
};

// All bounds for one (graph, separator) pair. Maxima over an empty
// component list are -1, as is the treewidth of the empty graph.
struct BoundReport {
  int clique_bound = -1;      // |S| + max_i tw(G_i)
  int components_bound = -1;  // max(tw(H_S), max_i (|S_i| + tw(G_i)))
  int corollary_bound = -1;   // tw(H_S) + max_i tw(G_i) + 1
  int tw_hs = -1;
  std::vector<ComponentTerm> per_component;
  SubMethod sub_method = SubMethod::kExact;
};

int separator_as_clique_bound(const Graph& g, const VertexSet& s, const TreewidthEvaluator& tw);
BoundReport separator_as_components_bound(const Graph& g, const VertexSet& s,
                                          const TreewidthEvaluator& tw);
// tw(H_S) + tw(G - S) + 1, with tw evaluated on the whole remainder graph.
int corollary_bound(const Graph& g, const VertexSet& s, const TreewidthEvaluator& tw);

// Glues a decomposition of H_S to decompositions of the components. Every
// bag of component i's decomposition gains S_i, and its first bag is linked
// to the first bag of `separator_td` that contains S_i. Components with an
// empty attachment set hang off bag 0, or are chained to each other when
// `separator_td` is empty. The result decomposes both G and G + F, and has
// width max(width(separator_td), max_i (|S_i| + width(T_i))).
//
// Throws AlignmentError when the component list does not match `fill`, and
// NotFoundError when some S_i lies in no bag of `separator_td`.
TreeDecomposition combine_decompositions(const TreeDecomposition& separator_td,
                                         std::span<const TreeDecomposition> component_tds,
                                         const FillInResult& fill);

// fill_in, evaluate H_S and every component with `tw`, then combine.
TreeDecomposition decompose_with_separator(const Graph& g, const VertexSet& s,
                                           const TreewidthEvaluator& tw);

struct RecursionConfig {
  int exact_threshold = 12;
  std::size_t candidate_budget = 50;
  std::uint64_t seed = 0;
  std::size_t max_calls = 100000;  // recursive invocations before giving up
};

struct RecursiveResult {
  int width = -1;
  TreeDecomposition decomposition;
  bool budget_exceeded = false;
};

// Exact below the threshold; otherwise split on the best-scoring candidate
// separator, recurse into H_S and every component, and combine. The width
// is always that of the returned (valid) decomposition. When max_calls is
// exhausted the single-bag decomposition is returned instead.
RecursiveResult recursive_bound(const Graph& g, const RecursionConfig& config = {});

TreewidthEvaluator recursive_evaluator(const RecursionConfig& config = {});

}  // namespace twsep
