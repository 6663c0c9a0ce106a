#include "twsep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "twsep/error.hpp"
#include "text_util.hpp"

namespace twsep {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> m;
  for (Vertex v = first; v <= last; ++v) m.push_back(v);
  VertexSet s;
  s.members_ = std::move(m);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::includes(const VertexSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  s += '}';
  return s;
}

Graph::Graph(VertexSet vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw SelfLoopError("self-loop on vertex " + std::to_string(e.u));
    }
    auto iu = index_of(e.u);
    auto iv = index_of(e.v);
    if (!iu || !iv) {
      throw MembershipError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside the vertex set");
    }
    adjacency_[*iu].push_back(e.v);
    adjacency_[*iv].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

Graph Graph::with_vertices(int n, std::span<const Edge> edges) {
  return Graph(VertexSet::range(1, n), edges);
}

std::optional<std::size_t> Graph::index_of(Vertex v) const {
  const auto& m = vertices_.members();
  auto it = std::lower_bound(m.begin(), m.end(), v);
  if (it == m.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - m.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  auto ia = index_of(a);
  if (!ia) return false;
  const auto& nbrs = adjacency_[*ia];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  auto i = index_of(v);
  if (!i) throw MembershipError("vertex " + std::to_string(v) + " is not in the graph");
  return adjacency_[*i];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (Vertex w : adjacency_[i]) {
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
    }
  }
  return out;
}

bool Graph::is_clique() const {
  const std::size_t n = vertex_count();
  return n == 0 || edge_count_ == n * (n - 1) / 2;
}

void require_subset(const Graph& g, const VertexSet& x, std::string_view what) {
  for (Vertex v : x) {
    if (!g.has_vertex(v)) {
      throw MembershipError(std::string(what) + " contains vertex " + std::to_string(v) +
                            " which is not in the graph");
    }
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "induced vertex set");
  std::vector<Edge> kept;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && x.contains(w)) kept.emplace_back(v, w);
    }
  }
  return Graph(x, kept);
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  require_subset(g, s, "removed vertex set");
  return induced_subgraph(g, g.vertices().minus(s));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      Vertex v = g.vertices()[i];
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        std::size_t j = *g.index_of(w);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    // Scanning starts in label order, so components come out sorted by
    // their smallest member.
    out.emplace_back(std::move(members));
  }
  return out;
}

Graph with_added_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(g.vertices(), all);
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long edge_lines = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw FormatError(detail::at_line(line_no, "duplicate header"));
      if (tokens.size() != 4 || tokens[1] != "tw") {
        throw FormatError(detail::at_line(line_no, "expected header 'p tw <n> <m>'"));
      }
      n = detail::parse_int(tokens[2], line_no);
      m = detail::parse_int(tokens[3], line_no);
      if (n < 0 || m < 0) throw FormatError(detail::at_line(line_no, "negative count in header"));
      have_header = true;
      continue;
    }
    if (!have_header) throw FormatError(detail::at_line(line_no, "edge line before header"));
    if (tokens.size() != 2) {
      throw FormatError(detail::at_line(line_no, "edge line must have exactly two vertices"));
    }
    long long a = detail::parse_int(tokens[0], line_no);
    long long b = detail::parse_int(tokens[1], line_no);
    if (a < 1 || a > n || b < 1 || b > n) {
      throw FormatError(detail::at_line(line_no, "vertex index out of range 1.." + std::to_string(n)));
    }
    if (a == b) {
      throw SelfLoopError(detail::at_line(line_no, "self-loop on vertex " + std::to_string(a)));
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++edge_lines;
  }
  if (!have_header) throw FormatError("missing 'p tw' header");
  if (edge_lines != m) {
    throw FormatError("header declares " + std::to_string(m) + " edges but " +
                      std::to_string(edge_lines) + " edge lines were read");
  }
  return Graph::with_vertices(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != static_cast<Vertex>(i + 1)) {
      throw FormatError(".gr output requires vertex labels 1..n");
    }
  }
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace twsep
