#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twsep/graph.hpp"

namespace twsep {

// Allowed value pairs for one binary constraint, d x d row-major. Rows index
// the value of the edge's smaller-labelled endpoint.
class ConstraintTable {
 public:
  ConstraintTable() = default;
  ConstraintTable(int domain_size, std::vector<std::uint8_t> allowed);

  static ConstraintTable not_equal(int domain_size);

  int domain_size() const { return d_; }
  bool allows(int row, int col) const { return allowed_[row * d_ + col] != 0; }
  ConstraintTable transposed() const;
  const std::vector<std::uint8_t>& bits() const { return allowed_; }

  friend bool operator==(const ConstraintTable&, const ConstraintTable&) = default;

 private:
  int d_ = 0;
  std::vector<std::uint8_t> allowed_;
};

// Binary CSP: variables are graph vertices, one table per edge, uniform
// domain {0, ..., d-1}.
struct CspInstance {
  Graph graph;
  int domain_size = 1;
  std::map<Edge, ConstraintTable> constraints;

  bool allows(Vertex x, int a, Vertex y, int b) const;
};

// Throws FormatError when a table is missing, misplaced, or mis-sized.
void check_instance(const CspInstance& inst);

CspInstance make_alldiff(Graph graph, int domain_size);

// Constraint file: `d <k>`, then either `alldiff` or one
// `t <u> <v> <k*k bits>` line per edge (bits row-major, rows indexed by u's
// value; whitespace between bits optional). `c` lines are comments.
CspInstance parse_constraints(Graph graph, std::istream& in);
CspInstance parse_constraints(Graph graph, std::string_view text);
void write_constraints(std::ostream& out, const CspInstance& inst);

// Values aligned with inst.graph.vertices().
using Assignment = std::vector<int>;

bool satisfies(const CspInstance& inst, const Assignment& values);

enum class SearchMode {
  kFirstSolution,  // stop at the first consistent full assignment
  kExhaustive,     // visit the whole search space; witness is the first hit
};

struct CacheReport {
  VertexSet key;             // the attachment set the cache is keyed by
  VertexSet conditioned_on;  // key prefix fixed by the enclosing search
  std::uint64_t peak_entries = 0;
  int level = 0;             // 0 for the caller's separator
};

struct SolveStats {
  std::uint64_t node_expansions = 0;
  std::uint64_t cache_entries = 0;  // peak stored tuples across all caches
  std::uint64_t cache_lookups = 0;
  bool satisfiable = false;
  std::optional<Assignment> witness;
  std::vector<CacheReport> caches;

  std::uint64_t operations() const { return node_expansions + cache_lookups; }
};

// Chronological backtracking in `var_order`, checking each assignment
// against all earlier neighbours. Throws PermutationError on a bad order.
SolveStats solve_backtrack(const CspInstance& inst, std::span<const Vertex> var_order,
                           SearchMode mode = SearchMode::kFirstSolution);
SolveStats solve_backtrack(const CspInstance& inst, SearchMode mode = SearchMode::kFirstSolution);

struct SeparatorSolveOptions {
  bool recurse = false;
  SearchMode mode = SearchMode::kFirstSolution;
  // Reduced problems with at most this many variables are searched directly.
  std::size_t base_threshold = 2;
  std::size_t candidate_budget = 50;
  std::uint64_t seed = 0;
};

// Separator caching. Each component of graph - s gets a cache keyed by its
// attachment set recording whether a tuple extends into the component. The
// problem restricted to s, with one derived constraint per component over
// its attachment set, is then searched directly or, with `recurse`, split
// again on the best candidate separator of H_S. A witness is rebuilt by
// re-solving each component under the chosen separator values.
//
// A cache whose key begins with a prefix of the enclosing search order only
// keeps entries for the current values of that prefix; older entries can
// never be looked up again.
SolveStats solve_with_separator(const CspInstance& inst, const VertexSet& s,
                                const SeparatorSolveOptions& options);
SolveStats solve_with_separator(const CspInstance& inst, const VertexSet& s, bool recurse,
                                SearchMode mode = SearchMode::kFirstSolution);

enum class GrowthMetric { kOperations, kPeakCache };

// Least-squares slope of log(metric) against log(d). Needs at least three
// distinct d values; DegenerateDataError if any measured count is zero.
double fit_growth_exponent(const std::function<CspInstance(int)>& family,
                           const std::function<SolveStats(const CspInstance&)>& solver,
                           std::span<const int> d_values,
                           GrowthMetric metric = GrowthMetric::kOperations);

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace twsep
