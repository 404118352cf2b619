#include "cdbg/constructions.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "cdbg/bounds.hpp"
#include "cdbg/common.hpp"
#include "cdbg/words.hpp"

namespace cdbg {

namespace {

mpz_class fac(int v) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

mpz_class upow(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

// The generators walk every word of the host graph, so they obey the same
// vertex budget as Graph::build (and member indices must fit in 32 bits).
void check_budget(const GraphSpec& spec) {
  spec.validate();
  std::uint64_t cap = std::min<std::uint64_t>(
      vertex_budget(), std::numeric_limits<std::uint32_t>::max());
  mpz_class total = spec.vertex_count();
  if (total > mpz_class(static_cast<unsigned long>(cap))) {
    throw BudgetError("construction over " + total.get_str() +
                      " vertices exceeds the budget of " + std::to_string(cap));
  }
}

// Collects the vertices whose words satisfy `keep`, in index order.
VertexSet filter_words(const GraphSpec& spec,
                       const std::function<bool(const Word&)>& keep) {
  check_budget(spec);
  VertexSet s{spec, {}};
  std::uint64_t index = 0;
  for_each_word(spec.d, spec.t, spec.n, [&](const Word& w) {
    if (keep(w)) s.members.push_back(static_cast<std::uint32_t>(index));
    ++index;
  });
  return s;
}

}  // namespace

Construction db_undirected_n2(int d) {
  if (d < 2) throw std::invalid_argument("db_undirected_n2 needs d >= 2");
  GraphSpec spec{d, 1, 2, Orientation::undirected};
  VertexSet s =
      filter_words(spec, [](const Word& w) { return w[0] == 1 && w[1] != 1; });
  return {std::move(s), mpz_class(d - 1), "thm2", false};
}

Construction db_undirected_n3(int d) {
  if (d < 2) throw std::invalid_argument("db_undirected_n3 needs d >= 2");
  GraphSpec spec{d, 1, 3, Orientation::undirected};
  bool odd = d % 2 == 1;
  VertexSet s = filter_words(spec, [d, odd](const Word& w) {
    if (w[0] % 2 == 0 && w[2] == w[0] - 1) return true;
    return odd && w[0] == d && w[2] == d;
  });
  return {std::move(s), mpz_class(d) * ((d + 1) / 2), "thm3", false};
}

Construction db_undirected_general(int d, int n) {
  if (d < 2) throw std::invalid_argument("db_undirected_general needs d >= 2");
  if (n < 4) throw std::invalid_argument("db_undirected_general needs n >= 4");
  GraphSpec spec{d, 1, n, Orientation::undirected};
  VertexSet s = filter_words(spec, [n](const Word& w) {
    return w[n - 2] != w[0] && w[n - 1] == w[1];
  });
  return {std::move(s), (d - 1) * upow(d, n - 2), "thm4", false};
}

Construction kautz_undirected_n3(int d) {
  if (d < 2) throw std::invalid_argument("kautz_undirected_n3 needs d >= 2");
  GraphSpec spec{d, 2, 3, Orientation::undirected};
  bool even = d % 2 == 0;
  // for even d the fixed tail of the second family is 2, for odd d it is d,
  // and the odd case adds a fourth family to reach every pair (d, x)
  int tail = even ? 2 : d;
  VertexSet s = filter_words(spec, [d, even, tail](const Word& w) {
    if (w[0] % 2 == 0) {
      if (w[2] == w[0] - 1) return true;
      return w[1] == w[0] - 1 && w[2] == tail;
    }
    if (even) return w[0] == 1 && w[2] % 2 == 1 && w[1] == w[2] + 1;
    if (w[0] != d) return false;
    if (w[2] % 2 == 1) return w[1] == w[2] + 1;
    return w[1] == w[2] - 1;
  });
  return {std::move(s), mpz_class(d) * d / 2, "thm7", false};
}

Construction kautz_undirected_general(int d, int n) {
  if (d < 2) throw std::invalid_argument("kautz_undirected_general needs d >= 2");
  if (n < 4) throw std::invalid_argument("kautz_undirected_general needs n >= 4");
  GraphSpec spec{d, 2, n, Orientation::undirected};
  VertexSet s = filter_words(spec, [d](const Word& w) {
    if (w[0] == 1) return w[1] != d || w[2] != 1;
    return w[0] == d && w[1] == 1 && w[2] == d && w[3] == 1;
  });
  mpz_class claimed = upow(d - 1, n - 1) - (d - 2) * upow(d - 1, n - 4);
  return {std::move(s), claimed, "thm8", false};
}

Construction directed_t3(int d, int n) {
  if (d < 3 || n < 4)
    throw std::invalid_argument("directed_t3 needs d >= 3 and n >= 4");
  GraphSpec spec{d, 3, n, Orientation::directed};
  bool odd = d % 2 == 1;
  VertexSet s = filter_words(spec, [d, odd](const Word& w) {
    if (w[0] % 2 == 1 && w[0] != d && w[1] == w[0] + 1) return true;
    if (w[0] % 2 == 0 && w[1] == w[0] - 1) return true;
    // odd d: words with d second and the least first symbol that keeps the
    // leading window distinct
    if (odd && w[1] == d) return w[0] == (w[2] == 1 ? 2 : 1);
    return false;
  });
  mpz_class claimed = odd ? mpz_class((d - 1) * mpz_class(d - 1) * upow(d - 2, n - 3))
                          : mpz_class(d * upow(d - 2, n - 2));
  return {std::move(s), claimed, "thm9", false};
}

Construction undirected_t3(int d, int n) {
  if (d < 3 || n < 4)
    throw std::invalid_argument("undirected_t3 needs d >= 3 and n >= 4");
  GraphSpec spec{d, 3, n, Orientation::undirected};
  VertexSet s = filter_words(spec, [](const Word& w) { return w[0] == 1; });
  return {std::move(s), (d - 1) * upow(d - 2, n - 2), "thm10", false};
}

Construction directed_general_t(int d, int t, int n) {
  if (t < 2 || t > d || t >= n)
    throw std::invalid_argument("directed_general_t needs 2 <= t <= d and t < n");
  GraphSpec spec{d, t, n, Orientation::directed};
  std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
  VertexSet s = filter_words(spec, [&](const Word& w) {
    if (w[0] == 1) return true;
    bool one_inside = false;
    for (int i = 2; i < t; ++i) one_inside = one_inside || w[i] == 1;
    if (!one_inside) return false;
    std::fill(used.begin(), used.end(), 0);
    for (int i = 1; i < t; ++i) used[static_cast<std::size_t>(w[i])] = 1;
    int least = 1;
    while (used[static_cast<std::size_t>(least)]) ++least;
    return w[0] == least;
  });
  mpz_class head = d - 1;  // (d-1)!/(d-t)!
  for (int i = d - 2; i > d - t; --i) head *= i;
  return {std::move(s), (d - 1) * head * upow(d - t + 1, n - t - 1), "thm11",
          false};
}

Construction perm_directed(int n) {
  if (n < 2) throw std::invalid_argument("perm_directed needs n >= 2");
  GraphSpec spec{n, n, n, Orientation::directed};
  Graph g = Graph::build(spec);
  VertexSet s{spec, {}};
  for (const auto& cycle : cycle_decomposition(g))
    for (std::size_t p = 0; p < cycle.size(); p += 2) s.members.push_back(cycle[p]);
  std::sort(s.members.begin(), s.members.end());
  return {std::move(s), mpz_class((n + 1) / 2) * fac(n - 1), "thm13", false};
}

Construction perm_undirected(int n) {
  if (n < 2) throw std::invalid_argument("perm_undirected needs n >= 2");
  GraphSpec spec{n, n, n, Orientation::undirected};
  Graph g = Graph::build(spec);
  VertexSet s{spec, {}};
  for (const auto& cycle : cycle_decomposition(g))
    for (std::size_t p = 0; p < cycle.size(); p += 3) s.members.push_back(cycle[p]);
  std::sort(s.members.begin(), s.members.end());
  return {std::move(s), mpz_class((n + 2) / 3) * fac(n - 1), "thm14", false};
}

Construction partial_perm_directed(int n, int c) {
  if (n < 2) throw std::invalid_argument("partial_perm_directed needs n >= 2");
  if (c < 1)
    throw std::invalid_argument(
        "partial_perm_directed needs c >= 1; use perm_directed for c = 0");
  APartition p = a_partition(n, c);
  GraphSpec spec{n + c, n, n, Orientation::directed};
  VertexSet s{spec, p.parts[1]};
  for (int i = 3; i <= n; ++i) {
    BlockSelection sel = select_blocks_directed(p, i);
    s.members.insert(s.members.end(), sel.chosen.members.begin(),
                     sel.chosen.members.end());
  }
  std::sort(s.members.begin(), s.members.end());
  mpz_class claimed = (n + c - 1) * fac(n + c - 1);
  mpz_class den = fac(c + 1);
  mpz_divexact(claimed.get_mpz_t(), claimed.get_mpz_t(), den.get_mpz_t());
  return {std::move(s), claimed, "thm15", false};
}

Construction partial_perm_undirected(int n, int c) {
  if (n < 3)
    throw std::invalid_argument(
        "partial_perm_undirected needs n >= 3; n = 2 is the Kautz case");
  if (c < 1)
    throw std::invalid_argument(
        "partial_perm_undirected needs c >= 1; use perm_undirected for c = 0");
  GraphSpec spec{n + c, n, n, Orientation::undirected};
  check_budget(spec);
  APartition p = a_partition(n, c);
  std::vector<std::uint32_t> members;
  auto take = [&members](const VertexSet& v) {
    members.insert(members.end(), v.members.begin(), v.members.end());
  };
  // split (A_1, ..., A_n) into runs of four; a run (A_i, ..., A_{i+3}) is
  // dominated by the selections from its two middle parts
  int full = n / 4;
  for (int run = 0; run < full; ++run) {
    int i = 1 + 4 * run;
    take(select_ublocks(p, i + 1).chosen);
    take(select_ublocks(p, i + 2).chosen);
  }
  int rest = n % 4;
  if (rest == 1) {
    take(select_ublocks(p, n - 1).chosen);
  } else if (rest >= 2) {
    take(select_ublocks(p, n - 1).chosen);
    take(select_blocks_directed(p, n).chosen);
  }
  // the vertices avoiding the largest symbol induce a copy of the graph one
  // symbol smaller; dominate them recursively and re-rank the result here
  Construction inner = c == 1 ? perm_undirected(n) : partial_perm_undirected(n, c - 1);
  Ranker rank_here(n + c, n, n);
  for (std::uint32_t m : inner.set.members) {
    Word w = unrank(m, n + c - 1, n, n);
    members.push_back(static_cast<std::uint32_t>(rank_here(w)));
  }
  std::sort(members.begin(), members.end());
  return {VertexSet{spec, std::move(members)}, thm16_recurrence(n, c), "thm16",
          true};
}

APartition a_partition(int n, int c) {
  if (n < 2 || c < 0)
    throw std::invalid_argument("a_partition needs n >= 2 and c >= 0");
  int d = n + c;
  GraphSpec spec{d, n, n, Orientation::directed};
  check_budget(spec);
  APartition p;
  p.n = n;
  p.c = c;
  p.parts.assign(static_cast<std::size_t>(n) + 1, {});
  std::uint64_t index = 0;
  for_each_word(d, n, n, [&](const Word& w) {
    int part = 0;
    for (int i = 0; i < n; ++i) {
      if (w[i] == d) {
        part = i + 1;
        break;
      }
    }
    p.parts[static_cast<std::size_t>(part)].push_back(
        static_cast<std::uint32_t>(index));
    ++index;
  });
  return p;
}

BlockSelection select_blocks_directed(const APartition& p, int i) {
  if (i < 2 || i > p.n)
    throw std::invalid_argument("select_blocks_directed needs 2 <= i <= n");
  int d = p.n + p.c;
  std::map<Word, std::vector<std::uint32_t>> by_tail;
  for (std::uint32_t v : p.parts[static_cast<std::size_t>(i)]) {
    Word w = unrank(v, d, p.n, p.n);
    by_tail[Word(w.begin() + 1, w.end())].push_back(v);
  }
  BlockSelection sel;
  sel.chosen.spec = GraphSpec{d, p.n, p.n, Orientation::directed};
  for (auto& [tail, group] : by_tail) {
    // the part is ascending, so each group is ascending and its front is the
    // lexicographically smallest member of the block
    sel.chosen.members.push_back(group.front());
    sel.blocks.push_back({std::move(group), sel.chosen.members.back()});
  }
  std::sort(sel.chosen.members.begin(), sel.chosen.members.end());
  return sel;
}

UBlockSelection select_ublocks(const APartition& p, int i) {
  if (p.c < 1) throw std::invalid_argument("select_ublocks needs c >= 1");
  if (i < 2 || i > p.n - 1)
    throw std::invalid_argument("select_ublocks needs 2 <= i <= n - 1");
  int d = p.n + p.c;
  Ranker rank(d, p.n, p.n);
  std::map<Word, std::vector<std::uint32_t>> by_mid;
  for (std::uint32_t v : p.parts[static_cast<std::size_t>(i)]) {
    Word w = unrank(v, d, p.n, p.n);
    by_mid[Word(w.begin() + 1, w.end() - 1)].push_back(v);
  }
  UBlockSelection sel;
  sel.chosen.spec = GraphSpec{d, p.n, p.n, Orientation::undirected};
  std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
  for (auto& [mid, group] : by_mid) {
    std::fill(used.begin(), used.end(), 0);
    for (int sym : mid) used[static_cast<std::size_t>(sym)] = 1;
    std::vector<int> free_syms;  // y_1 < y_2 < ... < y_s, s = c + 2
    for (int sym = 1; sym <= d; ++sym)
      if (!used[static_cast<std::size_t>(sym)]) free_syms.push_back(sym);
    UBlock blk;
    blk.members = std::move(group);
    Word w(static_cast<std::size_t>(p.n));
    std::copy(mid.begin(), mid.end(), w.begin() + 1);
    std::size_t s = free_syms.size();
    for (std::size_t k = 0; k < s; ++k) {
      // y_{k+1} z y_k, wrapping around to y_1 z y_s at the end
      w.front() = free_syms[(k + 1) % s];
      w.back() = free_syms[k];
      blk.chosen.push_back(static_cast<std::uint32_t>(rank(w)));
    }
    sel.chosen.members.insert(sel.chosen.members.end(), blk.chosen.begin(),
                              blk.chosen.end());
    sel.ublocks.push_back(std::move(blk));
  }
  std::sort(sel.chosen.members.begin(), sel.chosen.members.end());
  return sel;
}

}  // namespace cdbg
