#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>

#include "twsep/bounds.hpp"
#include "twsep/csp.hpp"
#include "twsep/elimination.hpp"
#include "twsep/error.hpp"
#include "twsep/separator_search.hpp"

namespace twsep {

namespace {

// Variables are addressed by their index in inst.graph.vertices().
using Var = std::size_t;
constexpr int kUnassigned = -1;

class Engine;
class ComponentCache;

// Constraint over an attachment set, answered by a component cache.
struct Derived {
  std::vector<Var> scope;
  ComponentCache* cache = nullptr;
};

// Derived constraints grouped by the variables they mention.
using ExtraIndex = std::vector<std::vector<const Derived*>>;

struct BinaryArc {
  Var other;
  const ConstraintTable* table;
  bool row;  // this variable indexes the table's rows
};

class ComponentCache {
 public:
  std::vector<Var> key;
  std::vector<Var> vars;
  ExtraIndex extras;
  std::vector<Var> conditioned;
  int level = 0;

  bool feasible(Engine& e);
  std::uint64_t peak() const { return peak_; }

 private:
  std::vector<int> conditioned_values_;
  std::map<std::vector<int>, bool> entries_;
  std::uint64_t peak_ = 0;
};

// Sub-problem handed to a search stage: its variables (ascending), the
// primal graph including derived-constraint cliques, and the derived
// constraints whose scope lies inside it.
struct Problem {
  std::vector<Var> vars;
  Graph primal;
  std::vector<const Derived*> extras;
};

class Engine {
 public:
  explicit Engine(const CspInstance& inst)
      : inst_(inst), d_(inst.domain_size), arcs_(inst.graph.vertex_count()) {
    check_instance(inst);
    value.assign(inst.graph.vertex_count(), kUnassigned);
    const Graph& g = inst.graph;
    for (const auto& [edge, table] : inst.constraints) {
      const Var u = *g.index_of(edge.u);
      const Var v = *g.index_of(edge.v);
      arcs_[u].push_back({v, &table, true});
      arcs_[v].push_back({u, &table, false});
    }
  }

  std::vector<int> value;
  std::uint64_t expansions = 0;
  std::uint64_t lookups = 0;
  std::uint64_t live_entries = 0;
  std::uint64_t peak_entries = 0;

  ExtraIndex index_extras(const std::vector<const Derived*>& extras) const {
    ExtraIndex idx(value.size());
    for (const Derived* d : extras) {
      for (Var v : d->scope) idx[v].push_back(d);
    }
    return idx;
  }

  // Chronological backtracking over `order`. `on_leaf` runs at every
  // consistent full assignment; returns whether one was found.
  template <typename Leaf>
  bool search(const std::vector<Var>& order, const ExtraIndex& extras, SearchMode mode,
              Leaf&& on_leaf) {
    return descend(order, 0, extras, mode, on_leaf);
  }

  ComponentCache& new_cache() { return *caches_.emplace_back(std::make_unique<ComponentCache>()); }
  const Derived* new_derived(std::vector<Var> scope, ComponentCache* cache) {
    return derived_.emplace_back(std::make_unique<Derived>(Derived{std::move(scope), cache})).get();
  }
  const std::vector<std::unique_ptr<ComponentCache>>& caches() const { return caches_; }

  const CspInstance& instance() const { return inst_; }

 private:
  template <typename Leaf>
  bool descend(const std::vector<Var>& order, std::size_t pos, const ExtraIndex& extras,
               SearchMode mode, Leaf& on_leaf) {
    if (pos == order.size()) {
      on_leaf();
      return true;
    }
    const Var x = order[pos];
    bool found = false;
    for (int a = 0; a < d_; ++a) {
      ++expansions;
      value[x] = a;
      if (!consistent(x, extras)) continue;
      if (descend(order, pos + 1, extras, mode, on_leaf)) {
        found = true;
        if (mode == SearchMode::kFirstSolution) break;
      }
    }
    value[x] = kUnassigned;
    return found;
  }

  bool consistent(Var x, const ExtraIndex& extras) {
    const int a = value[x];
    for (const BinaryArc& arc : arcs_[x]) {
      const int b = value[arc.other];
      if (b == kUnassigned) continue;
      if (!(arc.row ? arc.table->allows(a, b) : arc.table->allows(b, a))) return false;
    }
    for (const Derived* d : extras[x]) {
      const bool ready = std::all_of(d->scope.begin(), d->scope.end(),
                                     [&](Var v) { return value[v] != kUnassigned; });
      if (ready && !d->cache->feasible(*this)) return false;
    }
    return true;
  }

  const CspInstance& inst_;
  int d_;
  std::vector<std::vector<BinaryArc>> arcs_;
  std::vector<std::unique_ptr<ComponentCache>> caches_;
  std::vector<std::unique_ptr<Derived>> derived_;
};

bool ComponentCache::feasible(Engine& e) {
  ++e.lookups;
  if (!conditioned.empty()) {
    std::vector<int> current;
    current.reserve(conditioned.size());
    for (Var v : conditioned) current.push_back(e.value[v]);
    if (current != conditioned_values_) {
      e.live_entries -= entries_.size();
      entries_.clear();
      conditioned_values_ = std::move(current);
    }
  }
  std::vector<int> tuple;
  tuple.reserve(key.size());
  for (Var v : key) tuple.push_back(e.value[v]);
  if (auto it = entries_.find(tuple); it != entries_.end()) return it->second;

  const bool ok = e.search(vars, extras, SearchMode::kFirstSolution, [] {});
  entries_.emplace(std::move(tuple), ok);
  ++e.live_entries;
  e.peak_entries = std::max(e.peak_entries, e.live_entries);
  peak_ = std::max<std::uint64_t>(peak_, entries_.size());
  return ok;
}

std::vector<Var> to_vars(const Graph& g, const VertexSet& s) {
  std::vector<Var> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(*g.index_of(v));
  return out;
}

using Snapshot = std::vector<int>;  // aligned with Problem::vars

class SeparatorSolver {
 public:
  SeparatorSolver(Engine& engine, const SeparatorSolveOptions& options)
      : e_(engine), opts_(options) {}

  std::optional<Snapshot> decomposed(const Problem& p, const VertexSet& separator, int level) {
    const Graph& g = e_.instance().graph;
    const FillInResult fill = fill_in(p.primal, separator);

    Problem reduced;
    reduced.vars = to_vars(g, separator);
    reduced.primal = fill.augmented_separator_graph;
    for (const Derived* d : p.extras) {
      if (std::all_of(d->scope.begin(), d->scope.end(),
                      [&](Var v) { return separator.contains(g.vertices()[v]); })) {
        reduced.extras.push_back(d);
      }
    }

    std::vector<ComponentCache*> caches;
    for (std::size_t i = 0; i < fill.components.size(); ++i) {
      ComponentCache& cache = e_.new_cache();
      cache.key = to_vars(g, fill.attachment_sets[i]);
      cache.vars = to_vars(g, fill.components[i]);
      cache.level = level;
      std::vector<const Derived*> inherited;
      for (const Derived* d : p.extras) {
        if (std::any_of(d->scope.begin(), d->scope.end(), [&](Var v) {
              return fill.components[i].contains(g.vertices()[v]);
            })) {
          inherited.push_back(d);
        }
      }
      cache.extras = e_.index_extras(inherited);
      caches.push_back(&cache);
      if (cache.key.empty()) {
        if (!cache.feasible(e_)) return std::nullopt;
      } else {
        reduced.extras.push_back(e_.new_derived(cache.key, &cache));
      }
    }

    const std::optional<Snapshot> inner = solve(reduced, level + 1);
    if (!inner) return std::nullopt;

    // Rebuild the component values under the separator values found.
    std::vector<int> result(g.vertex_count(), kUnassigned);
    for (std::size_t k = 0; k < reduced.vars.size(); ++k) {
      e_.value[reduced.vars[k]] = (*inner)[k];
      result[reduced.vars[k]] = (*inner)[k];
    }
    for (ComponentCache* cache : caches) {
      const bool ok = e_.search(cache->vars, cache->extras, SearchMode::kFirstSolution, [&] {
        for (Var v : cache->vars) result[v] = e_.value[v];
      });
      if (!ok) throw std::logic_error("cached feasible tuple failed to extend");
    }
    for (Var v : reduced.vars) e_.value[v] = kUnassigned;

    Snapshot out;
    out.reserve(p.vars.size());
    for (Var v : p.vars) out.push_back(result[v]);
    return out;
  }

 private:
  std::optional<Snapshot> solve(const Problem& p, int level) {
    if (opts_.recurse && p.vars.size() > opts_.base_threshold) {
      try {
        const auto candidates = enumerate_candidates(p.primal, opts_.candidate_budget, opts_.seed);
        return decomposed(p, candidates.front().separator, level);
      } catch (const NoSeparatorError&) {
        // complete primal graph: nothing to split, search it directly
      }
    }
    return plain(p);
  }

  std::optional<Snapshot> plain(const Problem& p) {
    // A cache whose key starts with a prefix of this search order is only
    // looked up again while that prefix keeps its values.
    for (const Derived* d : p.extras) {
      std::size_t len = 0;
      while (len < p.vars.size() &&
             std::find(d->scope.begin(), d->scope.end(), p.vars[len]) != d->scope.end()) {
        ++len;
      }
      d->cache->conditioned.assign(p.vars.begin(), p.vars.begin() + static_cast<long>(len));
    }
    std::optional<Snapshot> first;
    e_.search(p.vars, e_.index_extras(p.extras), opts_.mode, [&] {
      if (first) return;
      first.emplace();
      for (Var v : p.vars) first->push_back(e_.value[v]);
    });
    return first;
  }

  Engine& e_;
  const SeparatorSolveOptions& opts_;
};

SolveStats collect(const Engine& e, const CspInstance& inst, std::optional<Assignment> witness) {
  SolveStats stats;
  stats.node_expansions = e.expansions;
  stats.cache_lookups = e.lookups;
  stats.cache_entries = e.peak_entries;
  stats.satisfiable = witness.has_value();
  stats.witness = std::move(witness);
  const auto& vs = inst.graph.vertices();
  for (const auto& cache : e.caches()) {
    CacheReport r;
    std::vector<Vertex> key;
    std::vector<Vertex> cond;
    for (Var v : cache->key) key.push_back(vs[v]);
    for (Var v : cache->conditioned) cond.push_back(vs[v]);
    r.key = VertexSet(std::move(key));
    r.conditioned_on = VertexSet(std::move(cond));
    r.peak_entries = cache->peak();
    r.level = cache->level;
    stats.caches.push_back(std::move(r));
  }
  return stats;
}

}  // namespace

SolveStats solve_backtrack(const CspInstance& inst, std::span<const Vertex> var_order,
                           SearchMode mode) {
  const Graph& g = inst.graph;
  require_permutation(g, EliminationOrdering{std::vector<Vertex>(var_order.begin(), var_order.end())});
  Engine e(inst);
  std::vector<Var> order;
  order.reserve(var_order.size());
  for (Vertex v : var_order) order.push_back(*g.index_of(v));
  std::optional<Assignment> witness;
  e.search(order, e.index_extras({}), mode, [&] {
    if (!witness) witness = e.value;
  });
  return collect(e, inst, std::move(witness));
}

SolveStats solve_backtrack(const CspInstance& inst, SearchMode mode) {
  const auto& m = inst.graph.vertices().members();
  return solve_backtrack(inst, std::span<const Vertex>(m), mode);
}

SolveStats solve_with_separator(const CspInstance& inst, const VertexSet& s,
                                const SeparatorSolveOptions& options) {
  require_subset(inst.graph, s, "separator");
  Engine e(inst);
  Problem top;
  top.primal = inst.graph;
  for (Var v = 0; v < inst.graph.vertex_count(); ++v) top.vars.push_back(v);
  SeparatorSolver solver(e, options);
  std::optional<Assignment> witness = solver.decomposed(top, s, 0);
  return collect(e, inst, std::move(witness));
}

SolveStats solve_with_separator(const CspInstance& inst, const VertexSet& s, bool recurse,
                                SearchMode mode) {
  SeparatorSolveOptions options;
  options.recurse = recurse;
  options.mode = mode;
  return solve_with_separator(inst, s, options);
}

}  // namespace twsep
