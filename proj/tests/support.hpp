// Fixtures, generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "twsep/csp.hpp"
#include "twsep/decomposition.hpp"
#include "twsep/elimination.hpp"
#include "twsep/graph.hpp"

namespace twsep::testing {

inline std::string data_path(const std::string& name) {
  return std::string(TWSEP_TEST_DATA) + "/" + name;
}

// The ten-vertex chordal example: triangles {1,2,3} {3,4,5} {3,4,8}
// {5,6,7} {8,9,10}.
inline Graph fig1() {
  return Graph::with_vertices(10, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {3, 8},
                                   {4, 8}, {5, 6}, {5, 7}, {6, 7}, {8, 9}, {8, 10}, {9, 10}});
}

inline const VertexSet kFig1S{3, 4, 5, 8};
inline const VertexSet kFig1SPrime{3, 5, 8};

// Bags C_1..C_5 with tree C4-C2-C1, C2-C3-C5.
inline TreeDecomposition fig1_decomposition() {
  TreeDecomposition t;
  t.bags = {VertexSet{1, 2, 3}, VertexSet{3, 4, 5}, VertexSet{3, 4, 8}, VertexSet{5, 6, 7},
            VertexSet{8, 9, 10}};
  t.tree_edges = {{3, 1}, {1, 0}, {1, 2}, {2, 4}};
  return t;
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::with_vertices(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(n, 1);
  return Graph::with_vertices(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  }
  return Graph::with_vertices(n, e);
}

inline Graph grid_graph(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::with_vertices(rows * cols, e);
}

// Uniform random labelled tree via a random parent for each vertex.
inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    e.emplace_back(parent(rng), v);
  }
  return Graph::with_vertices(n, e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::with_vertices(n, e);
}

inline VertexSet random_subset(const Graph& g, std::mt19937_64& rng, double p = 0.35) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> s;
  for (Vertex v : g.vertices()) {
    if (coin(rng)) s.push_back(v);
  }
  return VertexSet(std::move(s));
}

// Every graph on vertices 1..n (all 2^(n choose 2) edge sets).
inline void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) e.push_back(pairs[i]);
    }
    visit(Graph::with_vertices(n, e));
  }
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<Vertex> stack{g.vertices()[0]};
  std::vector<Vertex> seen{g.vertices()[0]};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == g.vertex_count();
}

// Minimum over all elimination orderings.
inline int brute_force_treewidth(const Graph& g) {
  std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
  int best = static_cast<int>(g.vertex_count()) - 1;
  do {
    best = std::min(best, width_of_ordering(g, EliminationOrdering{order}));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool reaches(const Graph& g, Vertex a, Vertex b, const std::vector<Vertex>& removed) {
  auto gone = [&](Vertex v) { return std::find(removed.begin(), removed.end(), v) != removed.end(); };
  std::vector<Vertex> stack{a};
  std::vector<Vertex> seen{a};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v == b) return true;
    for (Vertex w : g.neighbors(v)) {
      if (!gone(w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
    }
  }
  return false;
}

// Size of the smallest vertex set (avoiding a and b) separating a from b.
inline std::size_t brute_force_min_cut_size(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> others;
  for (Vertex v : g.vertices()) {
    if (v != a && v != b) others.push_back(v);
  }
  std::size_t best = others.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::vector<Vertex> removed;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) removed.push_back(others[i]);
    }
    if (removed.size() < best && !reaches(g, a, b, removed)) best = removed.size();
  }
  return best;
}

// Tries all d^n assignments.
inline bool brute_force_satisfiable(const CspInstance& inst) {
  const std::size_t n = inst.graph.vertex_count();
  Assignment a(n, 0);
  while (true) {
    if (satisfies(inst, a)) return true;
    std::size_t i = 0;
    while (i < n && ++a[i] == inst.domain_size) a[i++] = 0;
    if (i == n) return false;
  }
}

inline CspInstance random_csp(const Graph& g, int d, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  CspInstance inst;
  inst.graph = g;
  inst.domain_size = d;
  for (const Edge& e : g.edges()) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d) * d);
    for (auto& b : bits) b = coin(rng);
    inst.constraints.emplace(e, ConstraintTable(d, std::move(bits)));
  }
  return inst;
}

}  // namespace twsep::testing
