#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cdbg/graph.hpp"

namespace cdbg {

// ceil(vertices / (max_degree + 1)): no vertex covers more than max_degree+1.
mpz_class generic_lower(const mpz_class& vertices, const mpz_class& max_degree);

struct FormulaSource {
  std::string id;        // "eq3", "thm13", ...
  std::string citation;  // the formula, spelled out
};

struct BoundReport {
  GraphSpec spec;
  mpz_class lower;
  std::optional<mpz_class> upper;
  std::optional<mpz_class> exact;
  std::vector<FormulaSource> sources;
};

// Largest closed-form lower bound applicable to spec. Directed graphs always
// get ceil(V / (d-t+2)); undirected ones ceil(V / (2(d-t)+3)); small-n and
// permutation-family exact values raise the bound where they apply.
mpz_class lower_bound(const GraphSpec& spec);

// The exact domination number when a closed form pins it, otherwise the
// tightest applicable lower/upper pair. Exact values exist for directed
// t <= 2, directed t = 3 with even d, t = n = d, and undirected n = 2 or
// (t,n) = (1,3).
BoundReport exact_or_upper(const GraphSpec& spec);

// Upper bound for gamma(cDB(n+c, n, n)) by peeling one alphabet symbol at a
// time: T(n, 0) = ceil(n/3) (n-1)!, and
//   T(n, c) = T(n, c-1) + 2 ceil(n/4) (n+c-1)!/(c+1)!.
mpz_class thm16_recurrence(int n, int c);

// Same shape with the coarser per-level coefficient (n+4)/2, floored to an
// integer; never smaller than thm16_recurrence.
mpz_class thm16_closed_form(int n, int c);

// sum_{i=0..h} (n+i-1)!/(i+1)!  and its closed form
// ((n+h)!/(h+1)! - (n-1)!) / (n-1); the two agree exactly.
mpz_class level_sum(int n, int h);
mpz_class level_sum_closed(int n, int h);

}  // namespace cdbg
