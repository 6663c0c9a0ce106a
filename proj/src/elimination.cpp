#include "twsep/elimination.hpp"

#include <algorithm>
#include <set>

#include "twsep/error.hpp"

namespace twsep {

namespace {

// Adjacency over local indices that can absorb fill edges.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g) : adj_(g.vertex_count()), alive_(g.vertex_count(), 1) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      for (Vertex w : g.neighbors(g.vertices()[i])) adj_[i].insert(*g.index_of(w));
    }
  }

  std::size_t degree(std::size_t i) const { return adj_[i].size(); }
  const std::set<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  bool alive(std::size_t i) const { return alive_[i] != 0; }

  // Removes i after making its remaining neighbourhood a clique.
  void eliminate(std::size_t i) {
    const std::vector<std::size_t> nbrs(adj_[i].begin(), adj_[i].end());
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      adj_[nbrs[a]].erase(i);
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        adj_[nbrs[a]].insert(nbrs[b]);
        adj_[nbrs[b]].insert(nbrs[a]);
      }
    }
    adj_[i].clear();
    alive_[i] = 0;
  }

 private:
  std::vector<std::set<std::size_t>> adj_;
  std::vector<char> alive_;
};

std::vector<std::size_t> local_order(const Graph& g, const EliminationOrdering& o) {
  require_permutation(g, o);
  std::vector<std::size_t> out;
  out.reserve(o.order.size());
  for (Vertex v : o.order) out.push_back(*g.index_of(v));
  return out;
}

}  // namespace

void require_permutation(const Graph& g, const EliminationOrdering& o) {
  if (o.order.size() != g.vertex_count()) {
    throw PermutationError("ordering has " + std::to_string(o.order.size()) +
                           " entries but the graph has " + std::to_string(g.vertex_count()) +
                           " vertices");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : o.order) {
    auto i = g.index_of(v);
    if (!i) throw PermutationError("ordering mentions unknown vertex " + std::to_string(v));
    if (seen[*i]) throw PermutationError("ordering repeats vertex " + std::to_string(v));
    seen[*i] = 1;
  }
}

int width_of_ordering(const Graph& g, const EliminationOrdering& o) {
  EliminationGraph eg(g);
  int best = -1;
  for (std::size_t i : local_order(g, o)) {
    best = std::max(best, static_cast<int>(eg.degree(i)));
    eg.eliminate(i);
  }
  return best;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const EliminationOrdering& o) {
  const auto order = local_order(g, o);
  const std::size_t n = order.size();
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  EliminationGraph eg(g);
  TreeDecomposition t;
  t.bags.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i = order[p];
    std::vector<Vertex> bag{g.vertices()[i]};
    std::size_t parent = n;  // position of the earliest-eliminated later neighbour
    for (std::size_t j : eg.neighbors(i)) {
      bag.push_back(g.vertices()[j]);
      parent = std::min(parent, position[j]);
    }
    t.bags.emplace_back(std::move(bag));
    if (parent < n) {
      t.tree_edges.emplace_back(p, parent);
    } else if (p + 1 < n) {
      // Root of a connected piece; hang it under the final bag so the
      // result stays one tree.
      t.tree_edges.emplace_back(p, n - 1);
    }
    eg.eliminate(i);
  }
  return t;
}

EliminationOrdering min_degree_ordering(const Graph& g) {
  EliminationGraph eg(g);
  EliminationOrdering o;
  const std::size_t n = g.vertex_count();
  o.order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (eg.alive(i) && (pick == n || eg.degree(i) < eg.degree(pick))) pick = i;
    }
    o.order.push_back(g.vertices()[pick]);
    eg.eliminate(pick);
  }
  return o;
}

}  // namespace twsep
