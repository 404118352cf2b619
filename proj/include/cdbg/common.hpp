#pragma once

#include <cstdint>
#include <stdexcept>

namespace cdbg {

// Thrown when an operation would blow past a configured resource limit
// (vertex budgets, enumeration sizes, solver memory). Distinct from
// std::invalid_argument so callers can map it to a different exit path.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_vertex_budget = 5'000'000;

// Effective vertex budget; the CDBG_MAX_VERTICES environment variable
// overrides the default when set to a positive integer.
std::uint64_t vertex_budget();

}  // namespace cdbg
