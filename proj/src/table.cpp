#include "cdbg/table.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cdbg/constructions.hpp"
#include "cdbg/solver.hpp"

namespace cdbg {

namespace {

// hard sweep caps; max_vertices prunes further
constexpr int max_d = 7;
constexpr int max_n = 7;
constexpr int max_c = 3;

TableRow make_row(const std::string& family, const GraphSpec& spec,
                  std::optional<Construction> cons, const TableOptions& opt) {
  TableRow row;
  row.family = family;
  row.spec = spec;
  BoundReport report = exact_or_upper(spec);
  row.lower = report.lower;
  row.upper = report.upper;
  row.exact = report.exact;

  bool ok = true;
  Graph g = Graph::build(spec);

  if (cons) {
    const mpz_class size(static_cast<unsigned long>(cons->set.members.size()));
    row.construction_size = cons->set.members.size();
    ok = ok && is_dominating(g, cons->set);
    ok = ok && (cons->claimed_is_upper ? size <= cons->claimed_size
                                       : size == cons->claimed_size);
    ok = ok && size >= row.lower;
    if (row.exact) ok = ok && size >= *row.exact;
  }

  SolveBudget budget;
  budget.time_limit = std::chrono::hours(1);  // the node cap fires first
  budget.node_limit = opt.solver_node_limit;
  budget.workers = opt.workers;
  SolveResult res = exact_gamma(g, budget);
  row.gamma_low = res.gamma_low;
  row.gamma_high = res.gamma_high;

  ok = ok && is_dominating(g, VertexSet{spec, res.witness});
  ok = ok && res.gamma_low <= res.gamma_high;
  const mpz_class glow(static_cast<unsigned long>(res.gamma_low));
  const mpz_class ghigh(static_cast<unsigned long>(res.gamma_high));
  if (res.status == SolveStatus::exact) {
    ok = ok && res.gamma_low == res.gamma_high;
    ok = ok && glow >= row.lower;
    if (row.exact) ok = ok && glow == *row.exact;
    if (row.upper) ok = ok && glow <= *row.upper;
  } else {
    ok = ok && ghigh >= row.lower;
    if (row.exact) ok = ok && glow <= *row.exact && *row.exact <= ghigh;
    if (row.upper) ok = ok && glow <= *row.upper;
  }
  if (row.construction_size)
    ok = ok && res.gamma_low <= *row.construction_size;
  row.consistent = ok;
  return row;
}

}  // namespace

std::vector<TableRow> run_table(int which, const TableOptions& opt) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("table id must be 1 or 2");
  std::vector<TableRow> rows;
  auto sweep = [&](const std::string& family, GraphSpec spec,
                   const std::function<Construction()>& gen) {
    if (spec.vertex_count() >
        mpz_class(static_cast<unsigned long>(opt.max_vertices)))
      return;
    std::optional<Construction> cons;
    if (gen) cons = gen();
    rows.push_back(make_row(family, spec, std::move(cons), opt));
  };

  if (which == 1) {
    for (int d = 2; d <= max_d; ++d)
      for (int n = 2; n <= max_n; ++n)
        sweep("thm1", {d, 1, n, Orientation::directed}, nullptr);
    for (int d = 2; d <= max_d; ++d)
      for (int n = 2; n <= max_n; ++n)
        sweep("thm5", {d, 2, n, Orientation::directed}, nullptr);
    for (int d = 3; d <= max_d; ++d)
      for (int n = 4; n <= max_n; ++n)
        sweep("thm9", {d, 3, n, Orientation::directed},
              [&] { return directed_t3(d, n); });
    for (int d = 3; d <= max_d; ++d)
      for (int t = 3; t <= d; ++t)
        for (int n = t + 1; n <= max_n; ++n)
          sweep("thm11", {d, t, n, Orientation::directed},
                [&] { return directed_general_t(d, t, n); });
    for (int n = 2; n <= max_n; ++n)
      sweep("thm13", {n, n, n, Orientation::directed},
            [&] { return perm_directed(n); });
    for (int n = 2; n <= max_n; ++n)
      for (int c = 1; c <= max_c; ++c)
        sweep("thm15", {n + c, n, n, Orientation::directed},
              [&] { return partial_perm_directed(n, c); });
  } else {
    for (int d = 2; d <= max_d; ++d)
      sweep("thm2", {d, 1, 2, Orientation::undirected},
            [&] { return db_undirected_n2(d); });
    for (int d = 2; d <= max_d; ++d)
      sweep("thm3", {d, 1, 3, Orientation::undirected},
            [&] { return db_undirected_n3(d); });
    for (int d = 2; d <= max_d; ++d)
      for (int n = 4; n <= max_n; ++n)
        sweep("thm4", {d, 1, n, Orientation::undirected},
              [&] { return db_undirected_general(d, n); });
    for (int d = 2; d <= max_d; ++d)
      sweep("thm6", {d, 2, 2, Orientation::undirected}, nullptr);
    for (int d = 2; d <= max_d; ++d)
      sweep("thm7", {d, 2, 3, Orientation::undirected},
            [&] { return kautz_undirected_n3(d); });
    for (int d = 2; d <= max_d; ++d)
      for (int n = 4; n <= max_n; ++n)
        sweep("thm8", {d, 2, n, Orientation::undirected},
              [&] { return kautz_undirected_general(d, n); });
    for (int d = 3; d <= max_d; ++d)
      for (int n = 4; n <= max_n; ++n)
        sweep("thm10", {d, 3, n, Orientation::undirected},
              [&] { return undirected_t3(d, n); });
    for (int d = 3; d <= max_d; ++d)
      for (int t = 3; t <= d; ++t)
        for (int n = t + 1; n <= max_n; ++n)
          sweep("cor12", {d, t, n, Orientation::undirected}, [&] {
            // the directed set dominates the undirected graph a fortiori
            Construction cons = directed_general_t(d, t, n);
            cons.set.spec.orientation = Orientation::undirected;
            cons.formula_id = "cor12";
            return cons;
          });
    for (int n = 2; n <= max_n; ++n)
      sweep("thm14", {n, n, n, Orientation::undirected},
            [&] { return perm_undirected(n); });
    for (int n = 3; n <= max_n; ++n)
      for (int c = 1; c <= max_c; ++c)
        sweep("thm16", {n + c, n, n, Orientation::undirected},
              [&] { return partial_perm_undirected(n, c); });
  }
  return rows;
}

void write_csv(const std::vector<TableRow>& rows, std::ostream& out) {
  out << "family,d,t,n,lower,upper,exact,gamma_lo,gamma_hi,construction,verdict\n";
  for (const TableRow& r : rows) {
    out << r.family << ',' << r.spec.d << ',' << r.spec.t << ',' << r.spec.n
        << ',' << r.lower.get_str() << ',';
    if (r.upper) out << r.upper->get_str();
    out << ',';
    if (r.exact) out << r.exact->get_str();
    out << ',';
    if (r.gamma_low) out << *r.gamma_low;
    out << ',';
    if (r.gamma_high) out << *r.gamma_high;
    out << ',';
    if (r.construction_size) out << *r.construction_size;
    out << ',' << (r.consistent ? "consistent" : "violation") << '\n';
  }
}

}  // namespace cdbg
