#include "twsep/separator_search.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

#include "twsep/bounds.hpp"
#include "twsep/error.hpp"

namespace twsep {

namespace {

constexpr std::size_t kExhaustiveLimit = 30;
constexpr std::size_t kSampledPairs = 100;
constexpr std::size_t kSampledRoots = 10;

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, int capacity) {
    head_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    head_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  // Edmonds-Karp. Stops once `cap` units have been pushed.
  int max_flow(std::size_t source, std::size_t sink, int cap) {
    int flow = 0;
    std::vector<std::size_t> via(head_.size());
    while (flow < cap) {
      std::vector<char> seen(head_.size(), 0);
      std::queue<std::size_t> q;
      q.push(source);
      seen[source] = 1;
      while (!q.empty() && !seen[sink]) {
        std::size_t x = q.front();
        q.pop();
        for (std::size_t id : head_[x]) {
          const Arc& arc = arcs_[id];
          if (arc.residual > 0 && !seen[arc.to]) {
            seen[arc.to] = 1;
            via[arc.to] = id;
            q.push(arc.to);
          }
        }
      }
      if (!seen[sink]) break;
      for (std::size_t x = sink; x != source; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].residual -= 1;
        arcs_[via[x] ^ 1].residual += 1;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<char> reachable(std::size_t source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t id : head_[x]) {
        if (arcs_[id].residual > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          stack.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int residual;
  };
  std::vector<std::vector<std::size_t>> head_;
  std::vector<Arc> arcs_;
};

bool separates(const Graph& g, const VertexSet& s) {
  if (s.size() >= g.vertex_count()) return false;
  return connected_components(remove_vertices(g, s)).size() >= 2;
}

std::vector<VertexSet> bfs_levels(const Graph& g, Vertex root) {
  std::vector<VertexSet> levels;
  std::vector<int> depth(g.vertex_count(), -1);
  std::vector<Vertex> frontier{root};
  depth[*g.index_of(root)] = 0;
  while (!frontier.empty()) {
    levels.emplace_back(frontier);
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        int& dw = depth[*g.index_of(w)];
        if (dw < 0) {
          dw = static_cast<int>(levels.size());
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace

std::string_view to_string(CandidateSource source) {
  switch (source) {
    case CandidateSource::kVertexCut: return "vertex-cut";
    case CandidateSource::kBfsLevel: return "bfs-level";
    case CandidateSource::kNeighborhood: return "neighborhood";
    case CandidateSource::kUser: return "user";
  }
  return "unknown";
}

VertexSet min_vertex_cut(const Graph& g, Vertex a, Vertex b) {
  require_subset(g, VertexSet{a, b}, "cut endpoints");
  if (a == b || g.has_edge(a, b)) {
    throw AdjacentPairError("no vertex cut separates " + std::to_string(a) + " from " +
                            std::to_string(b));
  }
  // Vertex i becomes in-node 2i and out-node 2i+1.
  const std::size_t n = g.vertex_count();
  constexpr int kInfinite = std::numeric_limits<int>::max() / 4;
  const std::size_t ia = *g.index_of(a);
  const std::size_t ib = *g.index_of(b);
  FlowNetwork net(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    net.add_arc(2 * i, 2 * i + 1, (i == ia || i == ib) ? kInfinite : 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(g.vertices()[i])) {
      net.add_arc(2 * i + 1, 2 * *g.index_of(w), kInfinite);
    }
  }
  net.max_flow(2 * ia + 1, 2 * ib, static_cast<int>(n));
  const std::vector<char> side = net.reachable(2 * ia + 1);
  std::vector<Vertex> cut;
  for (std::size_t i = 0; i < n; ++i) {
    if (side[2 * i] && !side[2 * i + 1]) cut.push_back(g.vertices()[i]);
  }
  return VertexSet(std::move(cut));
}

TreewidthEvaluator default_cheap_evaluator() { return threshold_evaluator(12); }

int score(const Graph& g, const VertexSet& s, const TreewidthEvaluator& cheap) {
  return separator_as_components_bound(g, s, cheap).components_bound;
}

SeparatorCandidate user_candidate(const Graph& g, const VertexSet& s,
                                  const TreewidthEvaluator& cheap) {
  return {s, score(g, s, cheap), CandidateSource::kUser};
}

std::vector<SeparatorCandidate> enumerate_candidates(const Graph& g, std::size_t budget,
                                                     std::uint64_t seed,
                                                     const TreewidthEvaluator& cheap) {
  if (budget == 0) throw std::invalid_argument("candidate budget must be at least 1");
  if (g.is_clique()) throw NoSeparatorError("graph is complete; it has no separator");
  const std::size_t n = g.vertex_count();
  const auto& vs = g.vertices();
  std::mt19937_64 rng(seed);

  // First source wins for duplicates; insertion order is irrelevant since
  // the output is sorted.
  std::map<VertexSet, CandidateSource> pool;
  auto offer = [&](VertexSet s, CandidateSource src) {
    if (separates(g, s)) pool.emplace(std::move(s), src);
  };

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (n <= kExhaustiveLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!g.has_edge(vs[i], vs[j])) pairs.emplace_back(vs[i], vs[j]);
      }
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t tries = 0; pairs.size() < kSampledPairs && tries < 20 * kSampledPairs; ++tries) {
      Vertex a = vs[pick(rng)];
      Vertex b = vs[pick(rng)];
      if (a != b && !g.has_edge(a, b)) pairs.emplace_back(a, b);
    }
  }
  for (auto [a, b] : pairs) offer(min_vertex_cut(g, a, b), CandidateSource::kVertexCut);

  std::vector<Vertex> roots(vs.begin(), vs.end());
  if (n > kExhaustiveLimit) {
    std::shuffle(roots.begin(), roots.end(), rng);
    roots.resize(kSampledRoots);
  }
  for (Vertex root : roots) {
    const auto levels = bfs_levels(g, root);
    for (std::size_t k = 1; k + 1 < levels.size(); ++k) offer(levels[k], CandidateSource::kBfsLevel);
  }

  for (Vertex v : vs) {
    const auto nbrs = g.neighbors(v);
    VertexSet open(std::vector<Vertex>(nbrs.begin(), nbrs.end()));
    offer(open.united(VertexSet{v}), CandidateSource::kNeighborhood);
    offer(std::move(open), CandidateSource::kNeighborhood);
  }

  std::vector<SeparatorCandidate> out;
  out.reserve(pool.size());
  for (auto& [s, src] : pool) out.push_back({s, 0, src});

  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i].score = score(g, out[i].separator, cheap);
    } catch (...) {
#pragma omp critical(twsep_candidate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(out.begin(), out.end(), [](const SeparatorCandidate& x, const SeparatorCandidate& y) {
    return std::tie(x.score, x.separator) < std::tie(y.score, y.separator);
  });
  if (out.size() > budget) out.resize(budget);
  if (out.empty()) throw NoSeparatorError("no separating candidate found");
  return out;
}

}  // namespace twsep
