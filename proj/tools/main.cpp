#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cdbg/bounds.hpp"
#include "cdbg/common.hpp"
#include "cdbg/constructions.hpp"
#include "cdbg/graph.hpp"
#include "cdbg/json_io.hpp"
#include "cdbg/solver.hpp"
#include "cdbg/table.hpp"
#include "cdbg/words.hpp"

namespace {

using namespace cdbg;

Orientation pick_orientation(bool directed, bool undirected) {
  if (directed == undirected)
    throw std::invalid_argument("pass exactly one of --directed / --undirected");
  return directed ? Orientation::directed : Orientation::undirected;
}

// empty path means stdout
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  fn(out);
}

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

// 0 stands for "not given"; every real parameter is >= 1
Construction make_construction(const std::string& id, int d, int t, int n,
                               int c) {
  auto need = [&](int v, const char* flag) {
    if (v == 0)
      throw std::invalid_argument("construct " + id + " needs " + flag);
    return v;
  };
  if (id == "thm2") return db_undirected_n2(need(d, "--d"));
  if (id == "thm3") return db_undirected_n3(need(d, "--d"));
  if (id == "thm4") return db_undirected_general(need(d, "--d"), need(n, "--n"));
  if (id == "thm7") return kautz_undirected_n3(need(d, "--d"));
  if (id == "thm8")
    return kautz_undirected_general(need(d, "--d"), need(n, "--n"));
  if (id == "thm9") return directed_t3(need(d, "--d"), need(n, "--n"));
  if (id == "thm10") return undirected_t3(need(d, "--d"), need(n, "--n"));
  if (id == "thm11")
    return directed_general_t(need(d, "--d"), need(t, "--t"), need(n, "--n"));
  if (id == "thm13") return perm_directed(need(n, "--n"));
  if (id == "thm14") return perm_undirected(need(n, "--n"));
  if (id == "thm15")
    return partial_perm_directed(need(n, "--n"), need(c, "--c"));
  if (id == "thm16")
    return partial_perm_undirected(need(n, "--n"), need(c, "--c"));
  throw std::invalid_argument("unknown theorem id: " + id);
}

int parse_which(const std::string& s) {
  if (s == "1" || s == "table1") return 1;
  if (s == "2" || s == "table2") return 2;
  throw std::invalid_argument("unknown table: " + s + " (use 1 or 2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained de Bruijn graphs: constructions, bounds and exact domination"};
  app.require_subcommand(1);
  int exit_status = 0;

  // graph
  int gd = 0, gt = 0, gn = 0;
  bool gdir = false, gundir = false;
  std::string gformat = "dot", gout;
  auto* graph_cmd = app.add_subcommand("graph", "build a graph and export it");
  graph_cmd->add_option("--d", gd, "alphabet size")->required();
  graph_cmd->add_option("--t", gt, "constraint window")->required();
  graph_cmd->add_option("--n", gn, "word length")->required();
  graph_cmd->add_flag("--directed", gdir, "shift arcs");
  graph_cmd->add_flag("--undirected", gundir, "shift edges, both directions merged");
  graph_cmd->add_option("--format", gformat, "dot, csv-edges (alias csv) or json");
  graph_cmd->add_option("--out", gout, "output file (default stdout)");
  graph_cmd->callback([&] {
    const GraphSpec spec{gd, gt, gn, pick_orientation(gdir, gundir)};
    const Graph g = Graph::build(spec);
    with_output(gout, [&](std::ostream& os) { export_graph(g, gformat, os); });
  });

  // count
  int cd = 0, ct = 0, cn = 0;
  auto* count_cmd = app.add_subcommand("count", "count t-constrained words");
  count_cmd->add_option("--d", cd, "alphabet size")->required();
  count_cmd->add_option("--t", ct, "constraint window")->required();
  count_cmd->add_option("--n", cn, "word length")->required();
  count_cmd->callback(
      [&] { std::cout << count_words(cd, ct, cn).get_str() << '\n'; });

  // construct
  std::string xtheorem, xout;
  int xd = 0, xt = 0, xn = 0, xc = 0;
  auto* construct_cmd =
      app.add_subcommand("construct", "emit a dominating set construction");
  construct_cmd->add_option("--theorem", xtheorem, "construction id (thm2 ... thm16)")
      ->required();
  construct_cmd->add_option("--d", xd, "alphabet size");
  construct_cmd->add_option("--t", xt, "constraint window");
  construct_cmd->add_option("--n", xn, "word length");
  construct_cmd->add_option("--c", xc, "alphabet surplus d - n");
  construct_cmd->add_option("--out", xout, "output file (default stdout)");
  construct_cmd->callback([&] {
    const Construction cons = make_construction(xtheorem, xd, xt, xn, xc);
    const Graph g = Graph::build(cons.set.spec);
    const bool ok = is_dominating(g, cons.set);
    nlohmann::json j = to_json(cons);
    j["verified"] = ok;
    with_output(xout, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    if (!ok) exit_status = 1;
  });

  // verify
  std::string vin;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a vertex set for domination");
  verify_cmd->add_option("--in", vin, "JSON file with spec and members (default stdin)");
  verify_cmd->callback([&] {
    const nlohmann::json j = nlohmann::json::parse(slurp(vin));
    const Construction cons = construction_from_json(j);
    const Graph g = Graph::build(cons.set.spec);
    const bool ok = is_dominating(g, cons.set);
    std::cout << nlohmann::json{{"dominating", ok}}.dump() << '\n';
    if (!ok) exit_status = 1;
  });

  // gamma
  int yd = 0, yt = 0, yn = 0, yworkers = 1;
  bool ydir = false, yundir = false;
  std::int64_t ybudget_secs = 60;
  std::uint64_t ynode_limit = 100'000'000;
  std::string yout;
  auto* gamma_cmd =
      app.add_subcommand("gamma", "exact domination number by branch and bound");
  gamma_cmd->add_option("--d", yd, "alphabet size")->required();
  gamma_cmd->add_option("--t", yt, "constraint window")->required();
  gamma_cmd->add_option("--n", yn, "word length")->required();
  gamma_cmd->add_flag("--directed", ydir, "shift arcs");
  gamma_cmd->add_flag("--undirected", yundir, "shift edges");
  gamma_cmd->add_option("--budget-secs", ybudget_secs, "time budget in seconds")
      ->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--node-limit", ynode_limit, "search node budget")
      ->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--workers", yworkers, "search threads")
      ->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--out", yout, "output file (default stdout)");
  gamma_cmd->callback([&] {
    const GraphSpec spec{yd, yt, yn, pick_orientation(ydir, yundir)};
    const Graph g = Graph::build(spec);
    SolveBudget budget;
    budget.time_limit = std::chrono::seconds(ybudget_secs);
    budget.node_limit = ynode_limit;
    budget.workers = yworkers;
    const SolveResult res = exact_gamma(g, budget);
    with_output(yout,
                [&](std::ostream& os) { os << to_json(res, spec).dump(2) << '\n'; });
  });

  // table
  std::string twhich, tout;
  std::uint64_t tmax_vertices = 200, tnode_limit = 2'000'000;
  int tworkers = 1;
  auto* table_cmd = app.add_subcommand(
      "table", "sweep a family table and cross-check bounds, sets and solver");
  table_cmd->add_option("--which", twhich, "1/table1 (directed) or 2/table2 (undirected)")
      ->required();
  table_cmd->add_option("--max-vertices", tmax_vertices,
                        "skip instances with more vertices");
  table_cmd->add_option("--node-limit", tnode_limit, "solver node budget per row")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--workers", tworkers, "solver threads")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--out", tout, "CSV file (default stdout)");
  table_cmd->callback([&] {
    const int which = parse_which(twhich);
    TableOptions opt;
    opt.max_vertices = tmax_vertices;
    opt.solver_node_limit = tnode_limit;
    opt.workers = tworkers;
    const std::vector<TableRow> rows = run_table(which, opt);
    with_output(tout, [&](std::ostream& os) { write_csv(rows, os); });
    std::size_t bad = 0;
    for (const TableRow& r : rows) bad += r.consistent ? 0 : 1;
    std::cerr << "table" << which << ": " << rows.size() << " rows, " << bad
              << " violations\n";
    if (bad > 0) exit_status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
