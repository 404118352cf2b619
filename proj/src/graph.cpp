#include "cdbg/graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "cdbg/json_io.hpp"

namespace cdbg {

std::string_view to_string(Orientation o) {
  return o == Orientation::directed ? "directed" : "undirected";
}

void GraphSpec::validate() const {
  if (d < 2 || n < 2) throw std::invalid_argument("graphs need d >= 2 and n >= 2");
  if (t < 1 || t > std::min(d, n))
    throw std::invalid_argument("graphs need 1 <= t <= min(d, n)");
}

mpz_class GraphSpec::vertex_count() const {
  validate();
  return count_words(d, t, n);
}

std::vector<Word> successors(const Word& w, const GraphSpec& spec) {
  spec.validate();
  validate_word(w, spec.d, spec.t, spec.n);
  const int n = spec.n;
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(spec.d - spec.t + 1));
  Word v(w.begin() + 1, w.end());
  v.push_back(0);
  for (int y = 1; y <= spec.d; ++y) {
    bool banned = false;
    // the window before the last position, i.e. w's last t-1 symbols
    for (int j = std::max(0, n - spec.t); j < n - 1; ++j)
      if (v[j] == y) {
        banned = true;
        break;
      }
    if (banned) continue;
    v.back() = y;
    out.push_back(v);
  }
  return out;
}

std::vector<Word> predecessors(const Word& w, const GraphSpec& spec) {
  spec.validate();
  validate_word(w, spec.d, spec.t, spec.n);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(spec.d - spec.t + 1));
  Word v(w.size());
  std::copy(w.begin(), w.end() - 1, v.begin() + 1);
  for (int y = 1; y <= spec.d; ++y) {
    bool banned = false;
    // y lands one position before w, so it clashes with w's first t-1 symbols
    for (int j = 0; j < spec.t - 1; ++j)
      if (w[j] == y) {
        banned = true;
        break;
      }
    if (banned) continue;
    v[0] = y;
    out.push_back(v);
  }
  return out;
}

std::vector<Word> neighbors(const Word& w, const GraphSpec& spec) {
  if (spec.orientation != Orientation::undirected)
    throw std::invalid_argument("neighbors needs an undirected spec; use successors/predecessors");
  auto out = successors(w, spec);
  auto pred = predecessors(w, spec);
  out.insert(out.end(), pred.begin(), pred.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), w), out.end());
  return out;
}

Graph Graph::build(const GraphSpec& spec) { return build(spec, vertex_budget()); }

Graph Graph::build(const GraphSpec& spec, std::uint64_t max_vertices) {
  spec.validate();
  const mpz_class total = count_words(spec.d, spec.t, spec.n);
  if (total > max_vertices || total > std::numeric_limits<std::uint32_t>::max())
    throw BudgetError("graph on " + total.get_str() + " vertices exceeds the budget of " +
                      std::to_string(max_vertices));
  const auto nv = static_cast<std::uint32_t>(total.get_ui());
  const int d = spec.d, t = spec.t, n = spec.n;
  const int deg = d - t + 1;

  Graph g;
  g.spec_ = spec;
  g.offsets_.reserve(static_cast<std::size_t>(nv) + 1);
  g.offsets_.push_back(0);
  g.adj_.reserve(static_cast<std::size_t>(nv) * static_cast<std::size_t>(deg) *
                 (spec.orientation == Orientation::directed ? 1 : 2));

  const Ranker rk(d, t, n);
  const bool undirected = spec.orientation == Orientation::undirected;
  std::uint64_t self = 0;
  std::vector<std::uint32_t> nbr;
  Word shifted(static_cast<std::size_t>(n));
  for_each_word(d, t, n, [&](const Word& w) {
    nbr.clear();
    // successors: (w2 .. wn y), y admissible against w's last t-1 symbols
    std::copy(w.begin() + 1, w.end(), shifted.begin());
    for (int y = 1; y <= d; ++y) {
      bool banned = false;
      for (int j = std::max(0, n - t); j < n - 1; ++j)
        if (shifted[j] == y) {
          banned = true;
          break;
        }
      if (banned) continue;
      shifted[n - 1] = y;
      nbr.push_back(static_cast<std::uint32_t>(rk(shifted)));
    }
    if (undirected) {
      // predecessors: (y w1 .. w_{n-1}), y admissible against the first t-1
      std::copy(w.begin(), w.end() - 1, shifted.begin() + 1);
      for (int y = 1; y <= d; ++y) {
        bool banned = false;
        for (int j = 0; j < t - 1; ++j)
          if (w[j] == y) {
            banned = true;
            break;
          }
        if (banned) continue;
        shifted[0] = y;
        nbr.push_back(static_cast<std::uint32_t>(rk(shifted)));
      }
      std::sort(nbr.begin(), nbr.end());
      nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
      const auto it = std::find(nbr.begin(), nbr.end(), static_cast<std::uint32_t>(self));
      if (it != nbr.end()) nbr.erase(it);
    }
    g.adj_.insert(g.adj_.end(), nbr.begin(), nbr.end());
    g.offsets_.push_back(g.adj_.size());
    ++self;
  });
  return g;
}

Word Graph::word(std::uint32_t v) const {
  if (v >= vertex_count()) throw std::out_of_range("vertex index out of range");
  return unrank(v, spec_.d, spec_.t, spec_.n);
}

std::uint32_t Graph::index_of(const Word& w) const {
  return static_cast<std::uint32_t>(rank(w, spec_.d, spec_.t));
}

std::vector<std::vector<std::uint32_t>> cycle_decomposition(const Graph& g) {
  const GraphSpec& s = g.spec();
  if (s.t != s.n || s.n != s.d)
    throw std::invalid_argument("cycle decomposition is defined for t = n = d only");
  const std::uint32_t nv = g.vertex_count();
  const Ranker rk(s.d, s.t, s.n);
  std::vector<bool> seen(nv, false);
  std::vector<std::vector<std::uint32_t>> cycles;
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (seen[v]) continue;
    // v is the smallest unseen index, hence the smallest of its orbit
    std::vector<std::uint32_t> cycle;
    Word w = g.word(v);
    std::uint32_t u = v;
    do {
      seen[u] = true;
      cycle.push_back(u);
      std::rotate(w.begin(), w.begin() + 1, w.end());
      u = static_cast<std::uint32_t>(rk(w));
    } while (u != v);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

void export_dot(const Graph& g, std::ostream& out) {
  const bool directed = g.spec().orientation == Orientation::directed;
  out << (directed ? "digraph" : "graph") << " cdb {\n";
  const std::uint32_t nv = g.vertex_count();
  std::vector<std::string> label(nv);
  for (std::uint32_t v = 0; v < nv; ++v) {
    label[v] = to_string(g.word(v));
    out << "  \"" << label[v] << "\";\n";
  }
  const char* link = directed ? " -> " : " -- ";
  for (std::uint32_t v = 0; v < nv; ++v)
    for (const std::uint32_t w : g.adjacent(v)) {
      if (!directed && w < v) continue;
      out << "  \"" << label[v] << '"' << link << '"' << label[w] << "\";\n";
    }
  out << "}\n";
}

void export_csv(const Graph& g, std::ostream& out) {
  const bool directed = g.spec().orientation == Orientation::directed;
  out << "src,dst\n";
  const std::uint32_t nv = g.vertex_count();
  for (std::uint32_t v = 0; v < nv; ++v) {
    const std::string src = to_string(g.word(v));
    for (const std::uint32_t w : g.adjacent(v)) {
      if (!directed && w < v) continue;
      out << '"' << src << "\",\"" << to_string(g.word(w)) << "\"\n";
    }
  }
}

}  // namespace

void export_graph(const Graph& g, std::string_view format, std::ostream& out) {
  if (format == "dot")
    export_dot(g, out);
  else if (format == "csv" || format == "csv-edges")
    export_csv(g, out);
  else if (format == "json")
    out << to_json(g).dump(2) << '\n';
  else
    throw std::invalid_argument("unknown export format: " + std::string(format));
}

}  // namespace cdbg
