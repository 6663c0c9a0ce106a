#include "twsep/bounds.hpp"
#include "twsep/error.hpp"
#include "twsep/separator_search.hpp"

namespace twsep {

namespace {

struct BudgetExceeded {};

class Recursor {
 public:
  explicit Recursor(const RecursionConfig& config)
      : config_(config), cheap_(threshold_evaluator(config.exact_threshold)) {}

  TreeDecomposition run(const Graph& g) {
    if (++calls_ > config_.max_calls) throw BudgetExceeded{};
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};
    if (static_cast<int>(n) <= config_.exact_threshold) {
      return exact_treewidth(g, config_.exact_threshold).decomposition;
    }

    VertexSet separator;
    if (connected_components(g).size() == 1) {
      try {
        separator = enumerate_candidates(g, config_.candidate_budget, config_.seed, cheap_)
                        .front()
                        .separator;
      } catch (const NoSeparatorError&) {
        return single_bag_decomposition(g);  // complete graph: one bag is optimal
      }
    }

    const FillInResult fill = fill_in(g, separator);
    const TreeDecomposition separator_td = run(fill.augmented_separator_graph);
    std::vector<TreeDecomposition> parts;
    parts.reserve(fill.components.size());
    for (const VertexSet& comp : fill.components) parts.push_back(run(induced_subgraph(g, comp)));
    return combine_decompositions(separator_td, parts, fill);
  }

 private:
  const RecursionConfig& config_;
  TreewidthEvaluator cheap_;
  std::size_t calls_ = 0;
};

}  // namespace

RecursiveResult recursive_bound(const Graph& g, const RecursionConfig& config) {
  RecursiveResult r;
  try {
    r.decomposition = Recursor(config).run(g);
  } catch (const BudgetExceeded&) {
    r.decomposition = single_bag_decomposition(g);
    r.budget_exceeded = true;
  }
  r.width = width(r.decomposition);
  return r;
}

TreewidthEvaluator recursive_evaluator(const RecursionConfig& config) {
  return [config](const Graph& g) {
    RecursiveResult r = recursive_bound(g, config);
    const bool exact = static_cast<int>(g.vertex_count()) <= config.exact_threshold;
    return WidthEstimate{r.width, std::move(r.decomposition), exact};
  };
}

}  // namespace twsep
