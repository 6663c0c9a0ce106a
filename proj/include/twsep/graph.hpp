#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twsep {

using Vertex = int;

// Unordered pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex first, Vertex last);  // {first, ..., last}

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  bool includes(const VertexSet& other) const;  // other is a subset of *this

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;

  std::string to_string() const;  // "{1,2,3}"

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Undirected simple graph over arbitrary positive labels. Adjacency is kept
// per vertex as sorted label lists; the value is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws SelfLoopError on a loop and MembershipError on an endpoint outside
  // `vertices`. Duplicate edges collapse.
  Graph(VertexSet vertices, std::span<const Edge> edges);
  Graph(VertexSet vertices, std::initializer_list<Edge> edges)
      : Graph(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size())) {}

  // Vertices 1..n.
  static Graph with_vertices(int n, std::span<const Edge> edges);
  static Graph with_vertices(int n, std::initializer_list<Edge> edges) {
    return with_vertices(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const VertexSet& vertices() const { return vertices_; }

  bool has_vertex(Vertex v) const { return vertices_.contains(v); }
  bool has_edge(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Position of `v` in vertices(), which is also the index into internal
  // adjacency storage.
  std::optional<std::size_t> index_of(Vertex v) const;

  std::vector<Edge> edges() const;  // sorted
  bool is_clique() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
  }

 private:
  VertexSet vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Throws MembershipError unless `x` is a subset of the vertices of `g`.
void require_subset(const Graph& g, const VertexSet& x, std::string_view what);

Graph induced_subgraph(const Graph& g, const VertexSet& x);
Graph remove_vertices(const Graph& g, const VertexSet& s);
// Sorted by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
// `g` plus extra edges between existing vertices.
Graph with_added_edges(const Graph& g, std::span<const Edge> extra);

// PACE .gr format. Vertices are 1..n.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
// Requires vertex labels exactly 1..n; otherwise FormatError.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace twsep
