#include "cdbg/common.hpp"

#include <cstdlib>

namespace cdbg {

std::uint64_t vertex_budget() {
  if (const char* env = std::getenv("CDBG_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return default_vertex_budget;
}

}  // namespace cdbg
