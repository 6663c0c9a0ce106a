#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twsep/graph.hpp"

namespace twsep {

using BagIndex = std::size_t;

// A tree whose nodes carry vertex sets (bags). Bags are indexed from 0 here
// and from 1 in the .td file format.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<BagIndex, BagIndex>> tree_edges;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// Largest bag size minus one; -1 for the empty decomposition.
int width(const TreeDecomposition& t);

TreeDecomposition single_bag_decomposition(const Graph& g);

enum class ViolationKind {
  kUncoveredVertex,      // (1) vertex in no bag
  kUncoveredEdge,        // (2) edge in no bag
  kDisconnectedVertex,   // (3) bags holding the vertex are not a subtree
  kForeignVertex,        // bag mentions a vertex outside the graph
  kBadTreeEdge,          // endpoint out of range, self-loop or duplicate
  kNotATree,             // wrong edge count or disconnected
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> witness;  // vertex, edge endpoints, or bag indices
  std::string message;
};

struct ValidationVerdict {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationVerdict validate(const TreeDecomposition& t, const Graph& g);

// Smallest index of a bag containing every vertex of `c`. For a clique `c`
// of a graph that `t` decomposes such a bag always exists; NotFoundError
// otherwise.
BagIndex find_cluster_containing(const TreeDecomposition& t, const VertexSet& c);

struct TdFile {
  TreeDecomposition decomposition;
  int vertex_count = 0;
};

// PACE .td format.
TdFile parse_td(std::istream& in);
TdFile parse_td(std::string_view text);
void write_td(std::ostream& out, const TreeDecomposition& t, int vertex_count);
std::string td_to_string(const TreeDecomposition& t, int vertex_count);

}  // namespace twsep
