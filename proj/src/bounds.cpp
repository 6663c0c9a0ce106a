#include "twsep/bounds.hpp"

#include <algorithm>

#include "twsep/error.hpp"

namespace twsep {

namespace {

int max_or_empty(const std::vector<ComponentTerm>& terms) {
  int best = -1;
  for (const auto& t : terms) best = std::max(best, t.width);
  return best;
}

}  // namespace

ComponentSplit attachment_sets(const Graph& g, const VertexSet& s) {
  require_subset(g, s, "separator");
  ComponentSplit out;
  out.components = connected_components(remove_vertices(g, s));
  out.attachment_sets.reserve(out.components.size());
  for (const VertexSet& comp : out.components) {
    std::vector<Vertex> touched;
    for (Vertex v : comp) {
      for (Vertex w : g.neighbors(v)) {
        if (s.contains(w)) touched.push_back(w);
      }
    }
    out.attachment_sets.emplace_back(std::move(touched));
  }
  return out;
}

FillInResult fill_in(const Graph& g, const VertexSet& s) {
  ComponentSplit split = attachment_sets(g, s);
  FillInResult r;
  r.separator = s;
  std::vector<Edge> fill;
  for (const VertexSet& si : split.attachment_sets) {
    for (std::size_t a = 0; a < si.size(); ++a) {
      for (std::size_t b = a + 1; b < si.size(); ++b) {
        if (!g.has_edge(si[a], si[b])) fill.emplace_back(si[a], si[b]);
      }
    }
  }
  std::sort(fill.begin(), fill.end());
  fill.erase(std::unique(fill.begin(), fill.end()), fill.end());
  r.augmented_separator_graph = with_added_edges(induced_subgraph(g, s), fill);
  r.fill_edges = std::move(fill);
  r.components = std::move(split.components);
  r.attachment_sets = std::move(split.attachment_sets);
  return r;
}

Graph augmented_graph(const Graph& g, const FillInResult& fill) {
  return with_added_edges(g, fill.fill_edges);
}

int separator_as_clique_bound(const Graph& g, const VertexSet& s, const TreewidthEvaluator& tw) {
  ComponentSplit split = attachment_sets(g, s);
  int worst = -1;
  for (const VertexSet& comp : split.components) {
    worst = std::max(worst, tw(induced_subgraph(g, comp)).width);
  }
  return static_cast<int>(s.size()) + worst;
}

BoundReport separator_as_components_bound(const Graph& g, const VertexSet& s,
                                          const TreewidthEvaluator& tw) {
  const FillInResult fill = fill_in(g, s);
  BoundReport r;
  bool exact = true;

  const WidthEstimate hs = tw(fill.augmented_separator_graph);
  r.tw_hs = hs.width;
  exact = exact && hs.exact;

  int components_term = -1;
  for (std::size_t i = 0; i < fill.components.size(); ++i) {
    const WidthEstimate gi = tw(induced_subgraph(g, fill.components[i]));
    exact = exact && gi.exact;
    const std::size_t si = fill.attachment_sets[i].size();
    r.per_component.push_back({i, si, gi.width});
    components_term = std::max(components_term, static_cast<int>(si) + gi.width);
  }
  const int worst = max_or_empty(r.per_component);
  r.components_bound = std::max(r.tw_hs, components_term);
  r.clique_bound = static_cast<int>(s.size()) + worst;
  r.corollary_bound = r.tw_hs + worst + 1;
  r.sub_method = exact ? SubMethod::kExact : SubMethod::kBounded;
  return r;
}

int corollary_bound(const Graph& g, const VertexSet& s, const TreewidthEvaluator& tw) {
  const FillInResult fill = fill_in(g, s);
  return tw(fill.augmented_separator_graph).width + tw(remove_vertices(g, s)).width + 1;
}

TreeDecomposition combine_decompositions(const TreeDecomposition& separator_td,
                                         std::span<const TreeDecomposition> component_tds,
                                         const FillInResult& fill) {
  if (component_tds.size() != fill.components.size() ||
      fill.attachment_sets.size() != fill.components.size()) {
    throw AlignmentError("got " + std::to_string(component_tds.size()) +
                         " component decompositions for " +
                         std::to_string(fill.components.size()) + " components");
  }
  TreeDecomposition out = separator_td;
  std::optional<BagIndex> previous_first;
  for (std::size_t i = 0; i < component_tds.size(); ++i) {
    const TreeDecomposition& ti = component_tds[i];
    const VertexSet& si = fill.attachment_sets[i];
    if (ti.bags.empty()) {
      throw AlignmentError("decomposition of component " + std::to_string(i) + " has no bags");
    }
    const BagIndex offset = out.bags.size();
    for (const VertexSet& bag : ti.bags) out.bags.push_back(bag.united(si));
    for (auto [a, b] : ti.tree_edges) out.tree_edges.emplace_back(a + offset, b + offset);

    if (!si.empty()) {
      out.tree_edges.emplace_back(offset, find_cluster_containing(separator_td, si));
    } else if (!separator_td.bags.empty()) {
      out.tree_edges.emplace_back(offset, BagIndex{0});
    } else if (previous_first) {
      out.tree_edges.emplace_back(offset, *previous_first);
    }
    previous_first = offset;
  }
  return out;
}

TreeDecomposition decompose_with_separator(const Graph& g, const VertexSet& s,
                                           const TreewidthEvaluator& tw) {
  const FillInResult fill = fill_in(g, s);
  const TreeDecomposition separator_td = tw(fill.augmented_separator_graph).decomposition;
  std::vector<TreeDecomposition> parts;
  parts.reserve(fill.components.size());
  for (const VertexSet& comp : fill.components) {
    parts.push_back(tw(induced_subgraph(g, comp)).decomposition);
  }
  return combine_decompositions(separator_td, parts, fill);
}

}  // namespace twsep
