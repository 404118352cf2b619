#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cdbg/graph.hpp"
#include "cdbg/words.hpp"

namespace oracle {

// Exact domination number by plain subset enumeration in increasing size.
// Cover masks come straight from the word-level shift maps, so this shares
// no adjacency or bitset code with the solver under test.
inline int naive_gamma(const cdbg::GraphSpec& spec) {
  using namespace cdbg;
  const std::vector<Word> words = enumerate_words(spec.d, spec.t, spec.n);
  const int nv = static_cast<int>(words.size());
  if (nv > 64) throw std::invalid_argument("oracle holds masks in 64 bits");

  const Ranker rk(spec.d, spec.t, spec.n);
  std::vector<std::uint64_t> cover(nv, 0);
  for (int v = 0; v < nv; ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (const Word& s : successors(words[v], spec))
      m |= std::uint64_t{1} << rk(s);
    if (spec.orientation == Orientation::undirected)
      for (const Word& p : predecessors(words[v], spec))
        m |= std::uint64_t{1} << rk(p);
    cover[v] = m;
  }
  const std::uint64_t all =
      nv == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nv) - 1;

  for (int k = 1; k <= nv; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t got = 0;
      for (int i : idx) got |= cover[i];
      if (got == all) return k;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == nv - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return nv;  // unreachable: the full vertex set always dominates
}

}  // namespace oracle
