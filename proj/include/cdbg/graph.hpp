#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cdbg/words.hpp"

namespace cdbg {

enum class Orientation { directed, undirected };

std::string_view to_string(Orientation o);

// Parameters of a constrained de Bruijn graph: vertices are the t-constrained
// words of length n over [d]; arcs shift one symbol in. t = 1 is the de
// Bruijn graph, t = 2 the Kautz graph.
struct GraphSpec {
  int d = 0;
  int t = 0;
  int n = 0;
  Orientation orientation = Orientation::directed;

  // d >= 2, n >= 2, 1 <= t <= min(d, n); throws std::invalid_argument.
  void validate() const;
  mpz_class vertex_count() const;

  bool operator==(const GraphSpec&) const = default;
};

// The d-t+1 words (w2, ..., wn, y) reachable from w, in lexicographic order.
std::vector<Word> successors(const Word& w, const GraphSpec& spec);

// The d-t+1 words (y, w1, ..., w_{n-1}) that reach w, in lexicographic order.
std::vector<Word> predecessors(const Word& w, const GraphSpec& spec);

// Both shift directions merged, minus w itself; spec must be undirected.
std::vector<Word> neighbors(const Word& w, const GraphSpec& spec);

// Materialized adjacency. Vertex indexes are lexicographic ranks, so the
// same index means the same word across every structure built for a spec.
class Graph {
 public:
  static Graph build(const GraphSpec& spec);
  static Graph build(const GraphSpec& spec, std::uint64_t max_vertices);

  const GraphSpec& spec() const { return spec_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(offsets_.size() - 1); }

  // Out-neighbors when directed (self-loop kept; t = 1 has one per constant
  // word), neighbors when undirected (no self entries). Ascending.
  std::span<const std::uint32_t> adjacent(std::uint32_t v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // Arcs when directed; unordered edges when undirected.
  std::uint64_t edge_count() const {
    return spec_.orientation == Orientation::directed ? adj_.size() : adj_.size() / 2;
  }

  Word word(std::uint32_t v) const;
  std::uint32_t index_of(const Word& w) const;

 private:
  GraphSpec spec_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> adj_;
};

// A set of vertices of the graph described by spec; members ascending.
struct VertexSet {
  GraphSpec spec;
  std::vector<std::uint32_t> members;
};

// Rotate-left orbits of cDB(n,n,n) (spec must have t = n = d). Every orbit
// has length exactly n; each cycle is listed from its smallest index and
// cycles appear by smallest index. The cycles are vertex-disjoint and cover
// the graph, (n-1)! of them.
std::vector<std::vector<std::uint32_t>> cycle_decomposition(const Graph& g);

// format: "dot", "csv-edges" (alias "csv"), or "json". Deterministic:
// vertices in index order, edges ascending, undirected edges emitted once.
void export_graph(const Graph& g, std::string_view format, std::ostream& out);

}  // namespace cdbg
