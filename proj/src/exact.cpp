#include "twsep/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "twsep/error.hpp"

namespace twsep {

namespace {

using Mask = std::uint64_t;

struct SubsetTable {
  std::vector<Mask> adj;            // by local index
  std::vector<std::int8_t> best;    // by eliminated set
  std::vector<std::uint8_t> last;   // vertex eliminated last within the set
};

SubsetTable make_table(const Graph& g, int limit) {
  const int n = static_cast<int>(g.vertex_count());
  const int cap = std::min(limit, kMaxExactVertices);
  if (n > cap) {
    throw SizeLimitError("exact treewidth limited to " + std::to_string(cap) + " vertices, graph has " +
                         std::to_string(n));
  }
  SubsetTable t;
  t.adj.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(g.vertices()[i])) t.adj[i] |= Mask{1} << *g.index_of(w);
  }
  const std::size_t states = std::size_t{1} << n;
  t.best.assign(states, 0);
  t.last.assign(states, 0);
  t.best[0] = -1;
  return t;
}

// Degree of v when eliminated right after the set `done`.
int elimination_degree(const std::vector<Mask>& adj, Mask done, int v) {
  Mask reach = adj[v];
  Mask inside = reach & done;
  Mask visited = inside;
  while (inside) {
    Mask next = 0;
    for (Mask rest = inside; rest; rest &= rest - 1) {
      next |= adj[std::countr_zero(rest)];
    }
    reach |= next;
    inside = next & done & ~visited;
    visited |= inside;
  }
  reach &= ~done & ~(Mask{1} << v);
  return std::popcount(reach);
}

void evaluate(SubsetTable& t, Mask set) {
  int best = std::numeric_limits<int>::max();
  int pick = 0;
  for (Mask rest = set; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Mask before = set & ~(Mask{1} << v);
    const int prior = t.best[before];
    if (prior >= best) continue;
    const int cost = std::max(prior, elimination_degree(t.adj, before, v));
    if (cost < best) {
      best = cost;
      pick = v;
    }
  }
  t.best[set] = static_cast<std::int8_t>(best);
  t.last[set] = static_cast<std::uint8_t>(pick);
}

ExactResult finish(const Graph& g, const SubsetTable& t) {
  const int n = static_cast<int>(g.vertex_count());
  ExactResult r;
  Mask set = (Mask{1} << n) - 1;
  r.treewidth = t.best[set];
  r.ordering.order.resize(n);
  for (int p = n - 1; p >= 0; --p) {
    const int v = t.last[set];
    r.ordering.order[p] = g.vertices()[v];
    set &= ~(Mask{1} << v);
  }
  r.decomposition = decomposition_from_ordering(g, r.ordering);
  return r;
}

}  // namespace

ExactResult exact_treewidth_serial(const Graph& g, int limit) {
  SubsetTable t = make_table(g, limit);
  const Mask full = (Mask{1} << g.vertex_count()) - 1;
  for (Mask set = 1; set <= full && full != 0; ++set) evaluate(t, set);
  return finish(g, t);
}

ExactResult exact_treewidth(const Graph& g, int limit) {
  SubsetTable t = make_table(g, limit);
  const int n = static_cast<int>(g.vertex_count());
  std::vector<Mask> layer;
  for (int k = 1; k <= n; ++k) {
    layer.clear();
    // Gosper's hack: all n-bit masks with k bits set, ascending.
    for (Mask set = (Mask{1} << k) - 1; set < (Mask{1} << n);) {
      layer.push_back(set);
      const Mask low = set & -set;
      const Mask ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(static) if (count > 512)
    for (std::ptrdiff_t i = 0; i < count; ++i) evaluate(t, layer[i]);
  }
  return finish(g, t);
}

TreewidthEvaluator exact_evaluator(int limit) {
  return [limit](const Graph& g) {
    ExactResult r = exact_treewidth(g, limit);
    return WidthEstimate{r.treewidth, std::move(r.decomposition), true};
  };
}

TreewidthEvaluator greedy_evaluator() {
  return [](const Graph& g) {
    const EliminationOrdering o = min_degree_ordering(g);
    TreeDecomposition t = decomposition_from_ordering(g, o);
    const int w = width(t);
    return WidthEstimate{w, std::move(t), g.vertex_count() == 0};
  };
}

TreewidthEvaluator threshold_evaluator(int exact_threshold) {
  auto exact = exact_evaluator(exact_threshold);
  auto greedy = greedy_evaluator();
  return [=](const Graph& g) {
    return static_cast<int>(g.vertex_count()) <= exact_threshold ? exact(g) : greedy(g);
  };
}

}  // namespace twsep
