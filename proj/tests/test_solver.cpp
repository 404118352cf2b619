#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "cdbg/common.hpp"
#include "cdbg/solver.hpp"
#include "naive_gamma.hpp"

using namespace cdbg;

TEST_CASE("domination check follows the outward covering convention") {
  const Graph g = Graph::build({2, 1, 3, Orientation::directed});
  std::vector<std::uint32_t> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_dominating(g, {g.spec(), all}));
  CHECK_FALSE(is_dominating(g, {g.spec(), {}}));

  // (1,1,1) covers itself, (1,1,2); a second vertex cannot reach the rest
  CHECK_FALSE(is_dominating(g, {g.spec(), {0, 1}}));
}

TEST_CASE("greedy always returns a dominating set") {
  for (const GraphSpec spec : {GraphSpec{2, 1, 4, Orientation::directed},
                               GraphSpec{3, 2, 3, Orientation::undirected},
                               GraphSpec{4, 4, 4, Orientation::undirected}}) {
    const Graph g = Graph::build(spec);
    const VertexSet s = greedy_dominating(g);
    CHECK(is_dominating(g, s));
    CHECK(s.members.size() >= 1);
  }
}

TEST_CASE("exact search pins small domination numbers") {
  const Graph a = Graph::build({2, 1, 3, Orientation::directed});
  const SolveResult ra = exact_gamma(a);
  CHECK(ra.status == SolveStatus::exact);
  CHECK(ra.gamma_low == 3);
  CHECK(ra.gamma_high == 3);
  CHECK(ra.witness.size() == 3);
  CHECK(is_dominating(a, {a.spec(), ra.witness}));

  const Graph b = Graph::build({3, 3, 3, Orientation::undirected});
  CHECK(exact_gamma(b).gamma_high == 2);

  const Graph c = Graph::build({3, 3, 3, Orientation::directed});
  CHECK(exact_gamma(c).gamma_high == 4);

  const Graph e = Graph::build({2, 1, 4, Orientation::undirected});
  CHECK(exact_gamma(e).gamma_high == 4);
}

TEST_CASE("solver agrees with the brute-force oracle on every tiny graph") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 2; n <= 5; ++n)
      for (int t = 1; t <= std::min(d, n); ++t)
        for (const Orientation o :
             {Orientation::directed, Orientation::undirected}) {
          const GraphSpec spec{d, t, n, o};
          if (spec.vertex_count() > 14) continue;
          const Graph g = Graph::build(spec);
          const SolveResult res = exact_gamma(g);
          INFO("d=" << d << " t=" << t << " n=" << n << " directed="
                    << (o == Orientation::directed));
          REQUIRE(res.status == SolveStatus::exact);
          CHECK(res.gamma_low == res.gamma_high);
          CHECK(static_cast<int>(res.gamma_high) == oracle::naive_gamma(spec));
          CHECK(is_dominating(g, {spec, res.witness}));
          CHECK(res.witness.size() == res.gamma_high);
        }
}

TEST_CASE("a one-node budget leaves an honest interval") {
  const Graph g = Graph::build({3, 1, 3, Orientation::undirected});
  SolveBudget tight;
  tight.node_limit = 1;
  const SolveResult res = exact_gamma(g, tight);
  CHECK(res.status == SolveStatus::bounded);
  CHECK(res.gamma_low < res.gamma_high);
  CHECK(res.gamma_low >= 4);  // ceil(27 / (max cover size))
  CHECK(res.gamma_high >= 6);  // the true gamma; greedy cannot beat it
  CHECK(is_dominating(g, {g.spec(), res.witness}));
  CHECK(res.witness.size() == res.gamma_high);

  // the full run settles the same instance exactly
  const SolveResult full = exact_gamma(g);
  CHECK(full.status == SolveStatus::exact);
  CHECK(full.gamma_high == 6);
}

TEST_CASE("single-worker runs are deterministic") {
  const Graph g = Graph::build({3, 2, 3, Orientation::undirected});
  const SolveResult first = exact_gamma(g);
  const SolveResult second = exact_gamma(g);
  CHECK(first.status == SolveStatus::exact);
  CHECK(first.gamma_high == second.gamma_high);
  CHECK(first.witness == second.witness);
  CHECK(first.nodes_explored == second.nodes_explored);
}

TEST_CASE("extra workers do not change the answer") {
  SolveBudget wide;
  wide.workers = 4;
  for (const GraphSpec spec : {GraphSpec{2, 1, 4, Orientation::directed},
                               GraphSpec{3, 2, 4, Orientation::undirected}}) {
    const Graph g = Graph::build(spec);
    const SolveResult lone = exact_gamma(g);
    const SolveResult many = exact_gamma(g, wide);
    REQUIRE(lone.status == SolveStatus::exact);
    REQUIRE(many.status == SolveStatus::exact);
    CHECK(lone.gamma_high == many.gamma_high);
    CHECK(is_dominating(g, {spec, many.witness}));
  }
}

TEST_CASE("the dense cover table refuses graphs it cannot hold") {
  const Graph g = Graph::build({2, 1, 16, Orientation::directed}, 1u << 17);
  CHECK_THROWS_AS(exact_gamma(g), BudgetError);
}
