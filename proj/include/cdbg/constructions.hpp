#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdbg/graph.hpp"

namespace cdbg {

// A dominating set produced by one of the closed-form constructions,
// together with the size the closed form claims for it.
struct Construction {
  VertexSet set;
  mpz_class claimed_size;
  std::string formula_id;         // matches the CLI theorem ids
  bool claimed_is_upper = false;  // thm16 claims |set| <= claimed_size
};

// Undirected de Bruijn graphs (t = 1).
Construction db_undirected_n2(int d);                 // thm2: size d-1, optimal
Construction db_undirected_n3(int d);                 // thm3: size d ceil(d/2), optimal
Construction db_undirected_general(int d, int n);     // thm4, n >= 4: size (d-1) d^(n-2)

// Undirected Kautz graphs (t = 2).
Construction kautz_undirected_n3(int d);              // thm7: size floor(d^2/2)
Construction kautz_undirected_general(int d, int n);  // thm8, n >= 4

// t = 3.
Construction directed_t3(int d, int n);    // thm9, d >= 3, n > 3
Construction undirected_t3(int d, int n);  // thm10, d >= 3, n > 3

// 2 <= t <= d, t < n.
Construction directed_general_t(int d, int t, int n);  // thm11

// Permutation graphs cDB(n, n, n), via the rotate-left cycle structure.
Construction perm_directed(int n);    // thm13: size ceil(n/2) (n-1)!, optimal
Construction perm_undirected(int n);  // thm14: size ceil(n/3) (n-1)!, optimal

// Partial-permutation graphs cDB(n+c, n, n), c >= 1.
Construction partial_perm_directed(int n, int c);    // thm15
Construction partial_perm_undirected(int n, int c);  // thm16 (claimed size is a bound)

// Partition of the vertices of cDB(n+c, n, n) by the position of the largest
// symbol d = n+c: parts[0] holds the words avoiding d entirely (empty when
// c = 0), parts[i] those with d at position i. Indexes are vertex ranks.
struct APartition {
  int n = 0;
  int c = 0;
  std::vector<std::vector<std::uint32_t>> parts;  // n+1 entries, each ascending
};

APartition a_partition(int n, int c);  // n >= 2, c >= 0

// Words of part A_i that agree on positions 2..n differ only in the first
// symbol; each such block has c+1 members and its lexicographically smallest
// member covers the block's whole successor fan.
struct Block {
  std::vector<std::uint32_t> members;  // ascending, size c+1
  std::uint32_t representative;        // smallest member
};

struct BlockSelection {
  std::vector<Block> blocks;
  VertexSet chosen;  // the representatives: S_i, dominating A_{i-1} in cDB+
};

BlockSelection select_blocks_directed(const APartition& p, int i);  // 2 <= i <= n

// Words of A_i sharing positions 2..n-1 form a u-block of (c+2)(c+1)
// members; with the free symbols sorted y_1 < ... < y_s (s = c+2), the cycle
//   y_2 z y_1, y_3 z y_2, ..., y_s z y_{s-1}, y_1 z y_s
// covers the u-block's neighbors on both sides.
struct UBlock {
  std::vector<std::uint32_t> members;  // ascending, size (c+2)(c+1)
  std::vector<std::uint32_t> chosen;   // the cycle, size c+2
};

struct UBlockSelection {
  std::vector<UBlock> ublocks;
  VertexSet chosen;  // union of the cycles: S_i, dominating A_{i-1} and A_{i+1}
};

UBlockSelection select_ublocks(const APartition& p, int i);  // 2 <= i <= n-1, c >= 1

}  // namespace cdbg
