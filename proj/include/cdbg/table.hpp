#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdbg/bounds.hpp"
#include "cdbg/graph.hpp"

namespace cdbg {

struct TableOptions {
  // skip instances with more vertices than this
  std::uint64_t max_vertices = 200;
  // node-only solver budget: a fixed node count keeps rows deterministic
  // across machines, unlike a wall-clock limit
  std::uint64_t solver_node_limit = 2'000'000;
  int workers = 1;
};

struct TableRow {
  std::string family;  // theorem id the row sweeps
  GraphSpec spec;
  mpz_class lower;
  std::optional<mpz_class> upper;
  std::optional<mpz_class> exact;
  std::optional<std::uint64_t> gamma_low;  // solver interval, when it ran
  std::optional<std::uint64_t> gamma_high;
  std::optional<std::uint64_t> construction_size;
  bool consistent = true;
};

// Sweeps the summary-table families at desk scale (which = 1 directed,
// 2 undirected): for every in-range spec under options.max_vertices, compute
// the closed-form bounds, generate the family's dominating set, run the
// solver, and cross-check everything. A row is consistent when the solver
// interval, the bounds, and the verified construction size agree.
std::vector<TableRow> run_table(int which, const TableOptions& options = {});

// family,d,t,n,lower,upper,exact,gamma_lo,gamma_hi,construction,verdict
void write_csv(const std::vector<TableRow>& rows, std::ostream& out);

}  // namespace cdbg
