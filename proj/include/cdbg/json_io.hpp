#pragma once

#include <json.hpp>

#include "cdbg/bounds.hpp"
#include "cdbg/constructions.hpp"
#include "cdbg/graph.hpp"
#include "cdbg/solver.hpp"

namespace cdbg {

// Wire formats. Counts that may exceed 64 bits travel as decimal strings.

nlohmann::json to_json(const GraphSpec& spec);
GraphSpec spec_from_json(const nlohmann::json& j);

// {"spec": ..., "vertices": ["1,2", ...], "edges": [[i, j], ...]}
nlohmann::json to_json(const Graph& g);

// {"spec": ..., "members": ["2,3,1,2", ...], "claimed_size": "12",
//  "formula_id": "thm13"}
nlohmann::json to_json(const Construction& c);
Construction construction_from_json(const nlohmann::json& j);

// {"spec": ..., "lower": "8", "upper": "9" | null, "exact": null | "7",
//  "sources": [{"id": ..., "citation": ...}, ...]}
nlohmann::json to_json(const BoundReport& r);

// {"status": "exact" | "bounded", "gamma_low": 7, "gamma_high": 7,
//  "witness": ["1,2", ...], "nodes_explored": 123, "elapsed_ms": 4}
nlohmann::json to_json(const SolveResult& r, const GraphSpec& spec);

}  // namespace cdbg
