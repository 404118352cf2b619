#include "cdbg/json_io.hpp"

#include <algorithm>

namespace cdbg {

nlohmann::json to_json(const GraphSpec& spec) {
  return {{"d", spec.d}, {"t", spec.t}, {"n", spec.n}, {"orientation", to_string(spec.orientation)}};
}

GraphSpec spec_from_json(const nlohmann::json& j) {
  GraphSpec spec;
  spec.d = j.at("d").get<int>();
  spec.t = j.at("t").get<int>();
  spec.n = j.at("n").get<int>();
  const auto o = j.at("orientation").get<std::string>();
  if (o == "directed")
    spec.orientation = Orientation::directed;
  else if (o == "undirected")
    spec.orientation = Orientation::undirected;
  else
    throw std::invalid_argument("orientation must be directed or undirected, got " + o);
  spec.validate();
  return spec;
}

nlohmann::json to_json(const Graph& g) {
  const bool directed = g.spec().orientation == Orientation::directed;
  auto vertices = nlohmann::json::array();
  const std::uint32_t nv = g.vertex_count();
  for (std::uint32_t v = 0; v < nv; ++v) vertices.push_back(to_string(g.word(v)));
  auto edges = nlohmann::json::array();
  for (std::uint32_t v = 0; v < nv; ++v)
    for (const std::uint32_t w : g.adjacent(v)) {
      if (!directed && w < v) continue;
      edges.push_back(nlohmann::json::array({v, w}));
    }
  return {{"spec", to_json(g.spec())}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const Construction& c) {
  auto members = nlohmann::json::array();
  for (const std::uint32_t v : c.set.members)
    members.push_back(to_string(unrank(v, c.set.spec.d, c.set.spec.t, c.set.spec.n)));
  return {{"spec", to_json(c.set.spec)},
          {"members", std::move(members)},
          {"claimed_size", c.claimed_size.get_str()},
          {"formula_id", c.formula_id}};
}

Construction construction_from_json(const nlohmann::json& j) {
  Construction c;
  c.set.spec = spec_from_json(j.at("spec"));
  const Ranker rk(c.set.spec.d, c.set.spec.t, c.set.spec.n);
  for (const auto& m : j.at("members")) {
    const Word w = word_from_string(m.get<std::string>());
    validate_word(w, c.set.spec.d, c.set.spec.t, c.set.spec.n);
    c.set.members.push_back(static_cast<std::uint32_t>(rk(w)));
  }
  std::sort(c.set.members.begin(), c.set.members.end());
  c.set.members.erase(std::unique(c.set.members.begin(), c.set.members.end()), c.set.members.end());
  if (j.contains("claimed_size"))
    c.claimed_size = mpz_class(j.at("claimed_size").get<std::string>());
  else
    c.claimed_size = static_cast<unsigned long>(c.set.members.size());
  c.formula_id = j.value("formula_id", std::string{});
  return c;
}

nlohmann::json to_json(const BoundReport& r) {
  auto sources = nlohmann::json::array();
  for (const auto& s : r.sources) sources.push_back({{"id", s.id}, {"citation", s.citation}});
  nlohmann::json j{{"spec", to_json(r.spec)},
                   {"lower", r.lower.get_str()},
                   {"upper", nullptr},
                   {"exact", nullptr},
                   {"sources", std::move(sources)}};
  if (r.upper) j["upper"] = r.upper->get_str();
  if (r.exact) j["exact"] = r.exact->get_str();
  return j;
}

nlohmann::json to_json(const SolveResult& r, const GraphSpec& spec) {
  auto witness = nlohmann::json::array();
  for (const std::uint32_t v : r.witness) witness.push_back(to_string(unrank(v, spec.d, spec.t, spec.n)));
  return {{"status", r.status == SolveStatus::exact ? "exact" : "bounded"},
          {"gamma_low", r.gamma_low},
          {"gamma_high", r.gamma_high},
          {"witness", std::move(witness)},
          {"nodes_explored", r.nodes_explored},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace cdbg
