#include "twsep/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "twsep/error.hpp"

namespace twsep {

int width(const TreeDecomposition& t) {
  std::size_t largest = 0;
  for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition single_bag_decomposition(const Graph& g) {
  TreeDecomposition t;
  if (g.vertex_count() > 0) t.bags.push_back(g.vertices());
  return t;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUncoveredVertex: return "uncovered-vertex";
    case ViolationKind::kUncoveredEdge: return "uncovered-edge";
    case ViolationKind::kDisconnectedVertex: return "disconnected-vertex";
    case ViolationKind::kForeignVertex: return "foreign-vertex";
    case ViolationKind::kBadTreeEdge: return "bad-tree-edge";
    case ViolationKind::kNotATree: return "not-a-tree";
  }
  return "unknown";
}

bool ValidationVerdict::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

void check_tree_shape(const TreeDecomposition& t, std::vector<std::vector<BagIndex>>& adj,
                      std::vector<Violation>& out) {
  const std::size_t k = t.bags.size();
  adj.assign(k, {});
  std::set<std::pair<BagIndex, BagIndex>> seen;
  std::size_t good_edges = 0;
  for (auto [a, b] : t.tree_edges) {
    std::vector<Vertex> witness{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    if (a >= k || b >= k || a == b) {
      out.push_back({ViolationKind::kBadTreeEdge, witness, "tree edge endpoint invalid"});
      continue;
    }
    if (!seen.insert(std::minmax(a, b)).second) {
      out.push_back({ViolationKind::kBadTreeEdge, witness, "duplicate tree edge"});
      continue;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++good_edges;
  }
  if (k == 0) return;

  std::vector<char> reached(k, 0);
  std::vector<BagIndex> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    BagIndex x = stack.back();
    stack.pop_back();
    for (BagIndex y : adj[x]) {
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != k) {
    out.push_back({ViolationKind::kNotATree, {}, "bag graph is disconnected"});
  } else if (good_edges != k - 1) {
    out.push_back({ViolationKind::kNotATree, {}, "bag graph contains a cycle"});
  }
}

}  // namespace

ValidationVerdict validate(const TreeDecomposition& t, const Graph& g) {
  ValidationVerdict verdict;
  auto& out = verdict.violations;

  std::vector<std::vector<BagIndex>> tree_adj;
  check_tree_shape(t, tree_adj, out);

  // occurrences[i] = bags containing the i-th vertex of g
  std::vector<std::vector<BagIndex>> occurrences(g.vertex_count());
  std::set<Vertex> foreign;
  for (BagIndex b = 0; b < t.bags.size(); ++b) {
    for (Vertex v : t.bags[b]) {
      if (auto i = g.index_of(v)) {
        occurrences[*i].push_back(b);
      } else {
        foreign.insert(v);
      }
    }
  }
  for (Vertex v : foreign) {
    out.push_back({ViolationKind::kForeignVertex, {v},
                   "vertex " + std::to_string(v) + " appears in a bag but not in the graph"});
  }

  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (occurrences[i].empty()) {
      Vertex v = g.vertices()[i];
      out.push_back({ViolationKind::kUncoveredVertex, {v},
                     "vertex " + std::to_string(v) + " is in no bag"});
    }
  }

  for (const Edge& e : g.edges()) {
    const auto& a = occurrences[*g.index_of(e.u)];
    const auto& b = occurrences[*g.index_of(e.v)];
    std::vector<BagIndex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      out.push_back({ViolationKind::kUncoveredEdge, {e.u, e.v},
                     "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is in no bag"});
    }
  }

  std::vector<char> holds(t.bags.size(), 0);
  std::vector<char> reached(t.bags.size(), 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& occ = occurrences[i];
    if (occ.size() < 2) continue;
    for (BagIndex b : occ) holds[b] = 1;
    std::vector<BagIndex> stack{occ.front()};
    reached[occ.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      BagIndex x = stack.back();
      stack.pop_back();
      for (BagIndex y : tree_adj[x]) {
        if (holds[y] && !reached[y]) {
          reached[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    for (BagIndex b : occ) holds[b] = reached[b] = 0;
    if (count != occ.size()) {
      Vertex v = g.vertices()[i];
      out.push_back({ViolationKind::kDisconnectedVertex, {v},
                     "bags containing vertex " + std::to_string(v) + " are not connected"});
    }
  }
  return verdict;
}

BagIndex find_cluster_containing(const TreeDecomposition& t, const VertexSet& c) {
  for (BagIndex b = 0; b < t.bags.size(); ++b) {
    if (t.bags[b].includes(c)) return b;
  }
  throw NotFoundError("no bag contains " + c.to_string());
}

TdFile parse_td(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long num_bags = 0;
  long long max_bag = 0;
  long long n = 0;
  TdFile file;
  std::vector<char> bag_seen;
  long long bag_lines = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "s") {
      if (have_header) throw FormatError(detail::at_line(line_no, "duplicate header"));
      if (tokens.size() != 5 || tokens[1] != "td") {
        throw FormatError(detail::at_line(line_no, "expected header 's td <bags> <width+1> <n>'"));
      }
      num_bags = detail::parse_int(tokens[2], line_no);
      max_bag = detail::parse_int(tokens[3], line_no);
      n = detail::parse_int(tokens[4], line_no);
      if (num_bags < 0 || max_bag < 0 || n < 0) {
        throw FormatError(detail::at_line(line_no, "negative count in header"));
      }
      file.vertex_count = static_cast<int>(n);
      file.decomposition.bags.resize(static_cast<std::size_t>(num_bags));
      bag_seen.assign(static_cast<std::size_t>(num_bags), 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw FormatError(detail::at_line(line_no, "content before header"));
    if (tokens[0] == "b") {
      if (tokens.size() < 2) throw FormatError(detail::at_line(line_no, "bag line without id"));
      long long id = detail::parse_int(tokens[1], line_no);
      if (id < 1 || id > num_bags) throw FormatError(detail::at_line(line_no, "bag id out of range"));
      if (bag_seen[id - 1]) throw FormatError(detail::at_line(line_no, "bag id repeated"));
      bag_seen[id - 1] = 1;
      std::vector<Vertex> members;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        long long v = detail::parse_int(tokens[i], line_no);
        if (v < 1 || v > n) throw FormatError(detail::at_line(line_no, "vertex out of range"));
        members.push_back(static_cast<Vertex>(v));
      }
      file.decomposition.bags[id - 1] = VertexSet(std::move(members));
      ++bag_lines;
      continue;
    }
    if (tokens.size() != 2) throw FormatError(detail::at_line(line_no, "tree edge needs two bag ids"));
    long long a = detail::parse_int(tokens[0], line_no);
    long long b = detail::parse_int(tokens[1], line_no);
    if (a < 1 || a > num_bags || b < 1 || b > num_bags) {
      throw FormatError(detail::at_line(line_no, "tree edge bag id out of range"));
    }
    file.decomposition.tree_edges.emplace_back(static_cast<BagIndex>(a - 1),
                                               static_cast<BagIndex>(b - 1));
  }
  if (!have_header) throw FormatError("missing 's td' header");
  if (bag_lines != num_bags) {
    throw FormatError("header declares " + std::to_string(num_bags) + " bags but " +
                      std::to_string(bag_lines) + " bag lines were read");
  }
  if (width(file.decomposition) + 1 != max_bag) {
    throw FormatError("header declares largest bag " + std::to_string(max_bag) +
                      " but largest bag has " + std::to_string(width(file.decomposition) + 1));
  }
  return file;
}

TdFile parse_td(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& t, int vertex_count) {
  out << "s td " << t.bags.size() << ' ' << width(t) + 1 << ' ' << vertex_count << '\n';
  for (BagIndex b = 0; b < t.bags.size(); ++b) {
    out << "b " << b + 1;
    for (Vertex v : t.bags[b]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : t.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

std::string td_to_string(const TreeDecomposition& t, int vertex_count) {
  std::ostringstream out;
  write_td(out, t, vertex_count);
  return out.str();
}

}  // namespace twsep
