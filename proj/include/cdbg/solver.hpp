#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "cdbg/graph.hpp"

namespace cdbg {

// A vertex covers itself and its out-neighbors (its neighbors when the
// graph is undirected); a set dominates when the covers reach every vertex.
bool is_dominating(const Graph& g, const VertexSet& s);

// Max-fresh-coverage greedy (ties to the smallest index). Always returns a
// dominating set; used to seed the exact search.
VertexSet greedy_dominating(const Graph& g);

struct SolveBudget {
  std::chrono::milliseconds time_limit{60'000};
  std::uint64_t node_limit = 100'000'000;
  int workers = 1;
};

enum class SolveStatus { exact, bounded };

struct SolveResult {
  SolveStatus status = SolveStatus::bounded;
  std::uint32_t gamma_low = 0;
  std::uint32_t gamma_high = 0;
  std::vector<std::uint32_t> witness;  // dominating set of size gamma_high
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;
};

// Branch and bound for the domination number. Branches on the lowest-index
// uncovered vertex, candidates ordered by decreasing fresh coverage (ties by
// index), pruned with |chosen| + ceil(uncovered / max_cover) against the
// incumbent. Exhausting the space gives status exact with gamma_low ==
// gamma_high == |witness|; hitting the budget gives status bounded with the
// initial lower bound and the best incumbent. Single-worker runs are fully
// deterministic; more workers split the root candidates and keep the gamma
// interval (but not necessarily the witness) reproducible on completion.
SolveResult exact_gamma(const Graph& g, const SolveBudget& budget = {});

}  // namespace cdbg
