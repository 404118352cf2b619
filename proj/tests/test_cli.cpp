#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// runs the installed binary named by CDBG_CLI with stderr dropped
RunResult run(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("CDBG_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "CDBG_CLI must point at the cli binary");
  const std::string cmd = env + (env.empty() ? "" : " ") + bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// feeds doc to the subcommand over stdin
RunResult run_stdin(const std::string& args, const std::string& doc) {
  const char* bin = std::getenv("CDBG_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "CDBG_CLI must point at the cli binary");
  const std::string cmd =
      "printf '%s' '" + doc + "' | " + bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("count prints the word count in decimal") {
  const RunResult r = run("count --d 4 --t 3 --n 4");
  CHECK(r.status == 0);
  CHECK(r.out == "48\n");

  // counting tolerates sizes the graph builder refuses
  const RunResult big = run("count --d 30 --t 10 --n 40");
  CHECK(big.status == 0);
  CHECK(big.out.size() > 40);
}

TEST_CASE("graph exports the requested format") {
  const RunResult js = run("graph --d 2 --t 1 --n 3 --directed --format json");
  CHECK(js.status == 0);
  const auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed.at("vertices").size() == 8);
  CHECK(parsed.at("edges").size() == 16);

  const RunResult dot = run("graph --d 2 --t 1 --n 3 --directed --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);

  const RunResult csv = run("graph --d 3 --t 2 --n 2 --undirected --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("src,dst\n", 0) == 0);
}

TEST_CASE("usage problems exit with 2") {
  CHECK(run("graph --d 2 --t 1 --n 3 --format dot").status == 2);  // no orientation
  CHECK(run("graph --d 2 --t 1 --n 3 --directed --undirected --format dot").status == 2);
  CHECK(run("graph --d 2 --t 1 --n 3 --directed --format graphml").status == 2);
  CHECK(run("count --d 0 --t 1 --n 3").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("construct --theorem thm99 --d 3").status == 2);
  CHECK(run("construct --theorem thm15 --c 1").status == 2);  // missing --n
  CHECK(run("--help").status == 0);
}

TEST_CASE("resource guards exit with 3") {
  CHECK(run("graph --d 6 --t 1 --n 9 --directed --format dot").status == 3);
  CHECK(run("graph --d 2 --t 1 --n 4 --directed --format dot",
            "CDBG_MAX_VERTICES=10").status == 3);
  CHECK(run("graph --d 2 --t 1 --n 4 --directed --format dot",
            "CDBG_MAX_VERTICES=16").status == 0);
}

TEST_CASE("construct emits the set with its verification verdict") {
  const RunResult r = run("construct --theorem thm13 --n 3");
  CHECK(r.status == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("members").size() == 4);
  CHECK(parsed.at("claimed_size") == "4");
  CHECK(parsed.at("formula_id") == "thm13");
  CHECK(parsed.at("verified") == true);
  CHECK(parsed.at("spec").at("orientation") == "directed");

  const RunResult deep = run("construct --theorem thm11 --d 5 --t 3 --n 4");
  CHECK(deep.status == 0);
  CHECK(nlohmann::json::parse(deep.out).at("members").size() == 48);

  const RunResult peel = run("construct --theorem thm16 --n 3 --c 1");
  CHECK(peel.status == 0);
  const auto pj = nlohmann::json::parse(peel.out);
  CHECK(pj.at("members").size() == 8);
  CHECK(pj.at("verified") == true);
}

TEST_CASE("verify reads a vertex set and reports domination") {
  const std::string good =
      R"({"spec":{"d":2,"t":1,"n":2,"orientation":"undirected"},"members":["1,2","2,1"]})";
  const RunResult ok = run_stdin("verify", good);
  CHECK(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out).at("dominating") == true);

  const std::string bad =
      R"({"spec":{"d":2,"t":1,"n":2,"orientation":"undirected"},"members":["1,1"]})";
  const RunResult no = run_stdin("verify", bad);
  CHECK(no.status == 1);
  CHECK(nlohmann::json::parse(no.out).at("dominating") == false);

  CHECK(run_stdin("verify", "not json").status == 2);
}

TEST_CASE("gamma solves small instances exactly") {
  const RunResult r = run("gamma --d 2 --t 1 --n 4 --directed");
  CHECK(r.status == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("status") == "exact");
  CHECK(parsed.at("gamma_low") == 6);
  CHECK(parsed.at("gamma_high") == 6);
  CHECK(parsed.at("witness").size() == 6);

  const RunResult u = run("gamma --d 3 --t 3 --n 3 --undirected");
  CHECK(u.status == 0);
  CHECK(nlohmann::json::parse(u.out).at("gamma_high") == 2);
}

TEST_CASE("table sweeps report consistent rows") {
  const RunResult r = run("table --which 2 --max-vertices 40 --node-limit 200000");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("family,d,t,n,lower,upper,exact,gamma_lo,gamma_hi,construction,verdict\n",
                    0) == 0);
  CHECK(r.out.find("violation") == std::string::npos);
  CHECK(r.out.find("thm2,") != std::string::npos);
  CHECK(r.out.find("thm16,") != std::string::npos);

  CHECK(run("table --which table1 --max-vertices 30").status == 0);
  CHECK(run("table --which 3").status == 2);
}
