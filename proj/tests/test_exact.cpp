#include "doctest.h"
#include "support.hpp"
#include "twsep/error.hpp"
#include "twsep/exact.hpp"

using namespace twsep;
using namespace twsep::testing;

namespace {

void check_result(const Graph& g, const ExactResult& r) {
  CHECK(validate(r.decomposition, g).valid());
  CHECK(width(r.decomposition) == r.treewidth);
  if (g.vertex_count() > 0) CHECK(width_of_ordering(g, r.ordering) == r.treewidth);
}

}  // namespace

TEST_CASE("exact treewidth on known graphs") {
  CHECK(exact_treewidth(path_graph(10)).treewidth == 1);
  CHECK(exact_treewidth(cycle_graph(12)).treewidth == 2);
  CHECK(exact_treewidth(complete_graph(7)).treewidth == 6);
  CHECK(exact_treewidth(Graph::with_vertices(5, {})).treewidth == 0);
  CHECK(exact_treewidth(fig1()).treewidth == 2);
  CHECK(exact_treewidth(grid_graph(3, 3)).treewidth == 3);
  const auto empty = exact_treewidth(Graph{});
  CHECK(empty.treewidth == -1);
  CHECK(empty.decomposition.bags.empty());
  check_result(fig1(), exact_treewidth(fig1()));
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(exact_treewidth(path_graph(16)), SizeLimitError);
  CHECK_THROWS_AS(exact_treewidth_serial(path_graph(16)), SizeLimitError);
  CHECK(exact_treewidth(path_graph(16), 16).treewidth == 1);
  // limits above the hard cap are clamped to it
  CHECK(exact_treewidth(path_graph(3), kMaxExactVertices + 1).treewidth == 1);
  CHECK_THROWS_AS(exact_treewidth(path_graph(kMaxExactVertices + 1), 40), SizeLimitError);
}

TEST_CASE("closed forms for trees, cycles, cliques, edgeless graphs") {
  std::mt19937_64 rng(19);
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(exact_treewidth(random_tree(n, rng)).treewidth == 1);
    CHECK(exact_treewidth(path_graph(n)).treewidth == 1);
    CHECK(exact_treewidth(cycle_graph(n)).treewidth == 2);
    CHECK(exact_treewidth(complete_graph(n)).treewidth == n - 1);
    CHECK(exact_treewidth(Graph::with_vertices(n, {})).treewidth == 0);
  }
}

TEST_CASE("exact agrees with brute force over orderings") {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [](const Graph& g) {
      const auto r = exact_treewidth(g);
      CHECK(r.treewidth == brute_force_treewidth(g));
      check_result(g, r);
    });
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 6 + trial % 3;
    const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 5), rng);
    const auto r = exact_treewidth(g);
    CHECK(r.treewidth == brute_force_treewidth(g));
    check_result(g, r);
  }
}

TEST_CASE("parallel layers match the serial reference") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(8 + trial % 7, 0.3, rng);
    const auto par = exact_treewidth(g);
    const auto ser = exact_treewidth_serial(g);
    CHECK(par.treewidth == ser.treewidth);
    check_result(g, par);
    check_result(g, ser);
  }
}

TEST_CASE("treewidth is monotone under induced subgraphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(9, 0.35, rng);
    const VertexSet x = random_subset(g, rng, 0.6);
    CHECK(exact_treewidth(induced_subgraph(g, x)).treewidth <= exact_treewidth(g).treewidth);
  }
}

TEST_CASE("width of orderings") {
  const Graph g = fig1();
  // perfect elimination order of the chordal example
  const EliminationOrdering peo{{1, 2, 6, 7, 9, 10, 5, 8, 3, 4}};
  CHECK(width_of_ordering(g, peo) == 2);
  CHECK(brute_force_treewidth(complete_graph(4)) == 3);
  CHECK(width_of_ordering(complete_graph(4), EliminationOrdering{{3, 1, 4, 2}}) == 3);
  CHECK(width_of_ordering(Graph{}, EliminationOrdering{}) == -1);
  // eliminating the centre of a star first fills in the leaves
  const Graph star = Graph::with_vertices(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(width_of_ordering(star, EliminationOrdering{{1, 2, 3, 4, 5}}) == 4);
  CHECK(width_of_ordering(star, EliminationOrdering{{2, 3, 4, 5, 1}}) == 1);

  CHECK_THROWS_AS(width_of_ordering(g, EliminationOrdering{{1, 2, 3}}), PermutationError);
  CHECK_THROWS_AS(width_of_ordering(g, EliminationOrdering{{1, 1, 2, 3, 4, 5, 6, 7, 8, 9}}),
                  PermutationError);
  CHECK_THROWS_AS(width_of_ordering(g, EliminationOrdering{{1, 2, 3, 4, 5, 6, 7, 8, 9, 11}}),
                  PermutationError);
}

TEST_CASE("any ordering bounds treewidth from above and yields a valid decomposition") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(8, 0.35, rng);
    std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
    std::shuffle(order.begin(), order.end(), rng);
    const EliminationOrdering o{order};
    const int w = width_of_ordering(g, o);
    CHECK(w >= exact_treewidth(g).treewidth);
    const auto t = decomposition_from_ordering(g, o);
    CHECK(validate(t, g).valid());
    CHECK(width(t) == w);
  }
}

TEST_CASE("evaluators") {
  const Graph g = grid_graph(3, 4);
  const auto exact = exact_evaluator()(g);
  CHECK(exact.exact);
  CHECK(exact.width == 3);
  const auto greedy = greedy_evaluator()(g);
  CHECK_FALSE(greedy.exact);
  CHECK(greedy.width >= 3);
  CHECK(validate(greedy.decomposition, g).valid());
  CHECK(threshold_evaluator(12)(g).exact);
  CHECK_FALSE(threshold_evaluator(11)(g).exact);
  CHECK(exact_evaluator()(Graph{}).width == -1);
}
