#include "cdbg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

#include "cdbg/bitset.hpp"

namespace cdbg {

namespace {

std::uint32_t ceil_div(std::size_t a, std::size_t b) {
  return static_cast<std::uint32_t>((a + b - 1) / b);
}

// Dense cover sets: cover[v] = {v} union out-neighbors (neighbors when
// undirected). Quadratic bits overall, so refuse graphs where that would
// stop being a desk-scale allocation.
struct CoverTable {
  std::uint32_t nv = 0;
  std::size_t max_cover = 1;
  std::vector<Bitset> cover;

  explicit CoverTable(const Graph& g) : nv(g.vertex_count()) {
    constexpr std::uint64_t bit_cap = 1ull << 31;  // 256 MiB of cover bits
    if (static_cast<std::uint64_t>(nv) * nv > bit_cap)
      throw BudgetError("dense cover sets for " + std::to_string(nv) +
                        " vertices exceed the solver's memory budget");
    cover.assign(nv, Bitset(nv));
    for (std::uint32_t v = 0; v < nv; ++v) {
      cover[v].set(v);
      for (const std::uint32_t w : g.adjacent(v)) cover[v].set(w);
      max_cover = std::max(max_cover, cover[v].count());
    }
  }
};

std::vector<std::uint32_t> greedy_from(const CoverTable& table) {
  std::vector<std::uint32_t> picked;
  Bitset uncovered(table.nv, true);
  std::size_t remaining = table.nv;
  while (remaining > 0) {
    std::uint32_t best = 0;
    std::size_t best_fresh = 0;
    for (std::uint32_t v = 0; v < table.nv; ++v) {
      const std::size_t fresh = table.cover[v].count_and(uncovered);
      if (fresh > best_fresh) {
        best_fresh = fresh;
        best = v;
      }
    }
    picked.push_back(best);
    uncovered.and_not_assign(table.cover[best]);
    remaining -= best_fresh;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

struct Shared {
  std::mutex best_mx;
  std::vector<std::uint32_t> best;         // incumbent, guarded by best_mx
  std::atomic<std::uint32_t> best_size{0};  // mirror for cheap reads
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::uint64_t node_limit = 0;
  std::chrono::steady_clock::time_point deadline;

  void improve(const std::vector<std::uint32_t>& candidate) {
    std::lock_guard lock(best_mx);
    if (candidate.size() < best.size()) {
      best = candidate;
      std::sort(best.begin(), best.end());
      best_size.store(static_cast<std::uint32_t>(best.size()), std::memory_order_relaxed);
    }
  }
};

// In-neighbors plus the vertex itself: the only vertices whose cover
// includes it, hence the complete candidate list when it must get covered.
std::vector<std::vector<std::uint32_t>> dominator_lists(const Graph& g) {
  const std::uint32_t nv = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> dom(nv);
  for (std::uint32_t v = 0; v < nv; ++v) dom[v].push_back(v);
  for (std::uint32_t v = 0; v < nv; ++v)
    for (const std::uint32_t w : g.adjacent(v))
      if (w != v) dom[w].push_back(v);
  for (auto& list : dom) std::sort(list.begin(), list.end());
  return dom;
}

class Worker {
 public:
  Worker(const CoverTable& table, const std::vector<std::vector<std::uint32_t>>& dominators,
         Shared& shared)
      : table_(table), dominators_(dominators), shared_(shared), forbidden_(table.nv) {}

  std::uint64_t nodes() const { return nodes_; }

  // push whatever budget_hit has not flushed yet into the shared counter
  void flush_remainder() {
    shared_.nodes.fetch_add(since_flush_, std::memory_order_relaxed);
    since_flush_ = 0;
  }

  void seed(std::uint32_t root, const std::vector<std::uint32_t>& forbidden_roots) {
    chosen_.assign(1, root);
    for (const std::uint32_t f : forbidden_roots) forbidden_.set(f);
  }

  void search(const Bitset& uncovered, std::uint32_t depth) {
    if (budget_hit()) return;
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) {
      shared_.improve(chosen_);
      return;
    }
    const std::uint32_t incumbent = shared_.best_size.load(std::memory_order_relaxed);
    if (depth + ceil_div(remaining, table_.max_cover) >= incumbent) return;

    const auto u = static_cast<std::uint32_t>(uncovered.find_first());
    while (cands_.size() <= depth) cands_.emplace_back();
    std::vector<Cand>& cands = cands_[depth];
    cands.clear();
    for (const std::uint32_t v : dominators_[u]) {
      if (forbidden_.test(v)) continue;
      cands.push_back({table_.cover[v].count_and(uncovered), v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.fresh != b.fresh ? a.fresh > b.fresh : a.v < b.v;
    });

    while (scratch_.size() <= depth) scratch_.emplace_back(table_.nv);
    Bitset& next = scratch_[depth];
    const std::size_t first_forbidden = trail_.size();
    for (const auto& [fresh, v] : cands) {
      // a child would bounce off the same bound check immediately; since
      // fresh only shrinks along the sorted order, stop at the first one
      if (depth + 1 + ceil_div(remaining - fresh, table_.max_cover) >=
          shared_.best_size.load(std::memory_order_relaxed))
        break;
      next.assign_and_not(uncovered, table_.cover[v]);
      chosen_.push_back(v);
      search(next, depth + 1);
      chosen_.pop_back();
      if (shared_.out_of_budget.load(std::memory_order_relaxed)) break;
      forbidden_.set(v);
      trail_.push_back(v);
    }
    while (trail_.size() > first_forbidden) {
      forbidden_.reset(trail_.back());
      trail_.pop_back();
    }
  }

 private:
  struct Cand {
    std::size_t fresh;
    std::uint32_t v;
  };

  bool budget_hit() {
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return true;
    ++nodes_;
    ++since_flush_;
    if (since_flush_ >= 256 || nodes_ > shared_.node_limit) {
      const std::uint64_t total =
          shared_.nodes.fetch_add(since_flush_, std::memory_order_relaxed) + since_flush_;
      since_flush_ = 0;
      if (total >= shared_.node_limit || std::chrono::steady_clock::now() >= shared_.deadline) {
        shared_.out_of_budget.store(true, std::memory_order_relaxed);
        return true;
      }
    }
    return false;
  }

  const CoverTable& table_;
  const std::vector<std::vector<std::uint32_t>>& dominators_;
  Shared& shared_;
  std::vector<std::uint32_t> chosen_;
  // per depth, so a recursive call never touches the list its caller is walking
  std::deque<std::vector<Cand>> cands_;
  // a deque so growth leaves the per-depth bitsets other frames point at alone
  std::deque<Bitset> scratch_;
  Bitset forbidden_;
  std::vector<std::uint32_t> trail_;
  std::uint64_t nodes_ = 0;
  std::uint64_t since_flush_ = 0;
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.spec != g.spec())
    throw std::invalid_argument("vertex set was built for a different graph spec");
  const std::uint32_t nv = g.vertex_count();
  Bitset covered(nv);
  for (const std::uint32_t v : s.members) {
    if (v >= nv) throw std::out_of_range("vertex index out of range");
    covered.set(v);
    for (const std::uint32_t w : g.adjacent(v)) covered.set(w);
  }
  return covered.count() == nv;
}

VertexSet greedy_dominating(const Graph& g) {
  const CoverTable table(g);
  return {g.spec(), greedy_from(table)};
}

SolveResult exact_gamma(const Graph& g, const SolveBudget& budget) {
  const auto started = std::chrono::steady_clock::now();
  const CoverTable table(g);

  SolveResult result;
  result.gamma_low = ceil_div(table.nv, table.max_cover);

  Shared shared;
  shared.best = greedy_from(table);
  shared.best_size.store(static_cast<std::uint32_t>(shared.best.size()));
  shared.node_limit = budget.node_limit;
  shared.deadline = started + budget.time_limit;

  auto finish = [&](SolveStatus status) {
    result.status = status;
    result.gamma_high = shared.best_size.load();
    result.witness = shared.best;
    if (status == SolveStatus::exact) result.gamma_low = result.gamma_high;
    result.nodes_explored = shared.nodes.load();
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return result;
  };

  if (result.gamma_low == shared.best_size.load()) return finish(SolveStatus::exact);

  const auto dominators = dominator_lists(g);

  // root candidates: dominators of vertex 0, widest cover first
  std::vector<std::pair<std::size_t, std::uint32_t>> roots;
  for (const std::uint32_t v : dominators[0]) roots.push_back({table.cover[v].count(), v});
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  const int workers = std::max(1, budget.workers);
  if (workers == 1) {
    Worker w(table, dominators, shared);
    Bitset all(table.nv, true);
    w.search(all, 0);
    shared.nodes.store(w.nodes());
    return finish(shared.out_of_budget.load() ? SolveStatus::bounded : SolveStatus::exact);
  }

  // Parallel: workers pull root candidates in order; candidate k runs with
  // candidates 0..k-1 forbidden, exactly as the sequential sibling loop.
  std::atomic<std::size_t> next_root{0};
  std::atomic<bool> frontier_closed{false};
  auto run = [&] {
    Bitset root_unc(table.nv);
    const Bitset all(table.nv, true);
    while (!shared.out_of_budget.load(std::memory_order_relaxed) &&
           !frontier_closed.load(std::memory_order_relaxed)) {
      const std::size_t k = next_root.fetch_add(1);
      if (k >= roots.size()) break;
      const auto [fresh, v] = roots[k];
      if (1 + ceil_div(table.nv - fresh, table.max_cover) >=
          shared.best_size.load(std::memory_order_relaxed)) {
        // sorted by fresh, so every later root prunes the same way
        frontier_closed.store(true, std::memory_order_relaxed);
        break;
      }
      std::vector<std::uint32_t> earlier;
      for (std::size_t i = 0; i < k; ++i) earlier.push_back(roots[i].second);
      Worker worker(table, dominators, shared);
      worker.seed(v, earlier);
      root_unc.assign_and_not(all, table.cover[v]);
      worker.search(root_unc, 1);
      worker.flush_remainder();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  return finish(shared.out_of_budget.load() ? SolveStatus::bounded : SolveStatus::exact);
}

}  // namespace cdbg
