#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lapdist/combinatorics.hpp"
#include "lapdist/enumeration.hpp"
#include "lapdist/graph.hpp"
#include "lapdist/graph6.hpp"

using namespace lapdist;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s)
    if (c == '\'')
      quoted += "'\\''";
    else
      quoted += c;
  quoted += "'";
  return quoted;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  static int counter = 0;
  std::string base =
      "/tmp/lapdist_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  std::string out_path = base + ".out", err_path = base + ".err", in_path = base + ".in";
  std::ostringstream cmd;
  cmd << shell_quote(LAPDIST_BIN);
  for (const std::string& a : args) cmd << ' ' << shell_quote(a);
  if (!input.empty()) {
    std::ofstream(in_path) << input;
    cmd << " < " << shell_quote(in_path);
  }
  cmd << " > " << shell_quote(out_path) << " 2> " << shell_quote(err_path);
  int status = std::system(cmd.str().c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  if (!input.empty()) std::remove(in_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("construct prints the family encodings") {
  RunResult p5 = run_cli({"construct", "--family", "path", "--n", "5"});
  CHECK(p5.code == 0);
  CHECK(p5.out == graph6_encode(path(5)) + "\n");

  RunResult b111 = run_cli({"construct", "--family", "binary-star", "--variant", "B", "--p", "1",
                            "--q", "1", "--r", "1"});
  CHECK(b111.code == 0);
  CHECK(is_isomorphic(graph6_decode(lines_of(b111.out).at(0)), path(5)));

  RunResult prime = run_cli({"construct", "--family", "binary-star", "--variant", "B'", "--p",
                             "2", "--q", "1", "--r", "0"});
  RunResult prime_alias = run_cli({"construct", "--family", "binary-star", "--variant",
                                   "Bprime", "--p", "2", "--q", "1", "--r", "0"});
  CHECK(prime.code == 0);
  CHECK(prime.out == prime_alias.out);
  CHECK(prime.out == graph6_encode(binary_star(BinaryStarVariant::BPrime, 2, 1, 0)) + "\n");

  RunResult octa = run_cli({"construct", "--family", "complete-multipartite", "--parts", "2",
                            "2", "2"});
  CHECK(octa.code == 0);
  CHECK(octa.out == graph6_encode(complete_multipartite({2, 2, 2})) + "\n");

  RunResult h = run_cli({"construct", "--family", "double-starlike", "--p", "1", "--n", "2",
                         "--q", "1"});
  CHECK(h.code == 0);
  CHECK(is_isomorphic(graph6_decode(lines_of(h.out).at(0)), path(4)));

  RunResult kj = run_cli({"construct", "--family", "k1-join", "--n", "5", "--m", "3"});
  CHECK(kj.code == 0);
  CHECK(kj.out == graph6_encode(k1_join_family(5, 3)) + "\n");
}

TEST_CASE("construct rejects bad flag combinations") {
  CHECK(run_cli({"construct", "--family", "path"}).code == 2);
  CHECK(run_cli({"construct", "--family", "snowflake", "--n", "3"}).code == 2);
  RunResult bad = run_cli({"construct", "--family", "binary-star", "--variant", "B", "--p", "1",
                           "--q", "0", "--r", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run_cli({"construct", "--family", "star", "--n", "70"}).code == 3);
}

TEST_CASE("charpoly prints coefficients constant term first") {
  RunResult direct = run_cli({"charpoly", graph6_encode(complete(4))});
  CHECK(direct.code == 0);
  CHECK(direct.out == "0 -64 48 -12 1\n");

  RunResult piped = run_cli({"charpoly", "-"}, graph6_encode(path(2)) + "\n");
  CHECK(piped.code == 0);
  CHECK(piped.out == "0 -2 1\n");

  CHECK(run_cli({"charpoly", "C"}).code == 2);
}

TEST_CASE("spectrum prints exact roots and isolating intervals") {
  RunResult s5 = run_cli({"spectrum", graph6_encode(star(5))});
  CHECK(s5.code == 0);
  CHECK(s5.out == "0 1\n1 3\n5 1\n");

  RunResult p4 = run_cli({"spectrum", graph6_encode(path(4)), "--width", "1/4"});
  CHECK(p4.code == 0);
  std::vector<std::string> lines = lines_of(p4.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "0 1");
  CHECK(lines[1].front() == '(');
  CHECK(lines[2] == "2 1");
  CHECK(lines[3].front() == '(');

  CHECK(run_cli({"spectrum", graph6_encode(path(4)), "--width", "0"}).code == 2);
  CHECK(run_cli({"spectrum", graph6_encode(path(4)), "--width", "bogus"}).code == 2);
}

TEST_CASE("count evaluates interval queries") {
  std::string b040 = graph6_encode(binary_star(BinaryStarVariant::B, 0, 4, 0));
  RunResult low = run_cli({"count", "--interval", "[0,2]", b040});
  CHECK(low.code == 0);
  CHECK(low.out == "4\n");
  RunResult high = run_cli({"count", "--interval", "(2,6]", b040});
  CHECK(high.code == 0);
  CHECK(high.out == "2\n");
  CHECK(run_cli({"count", "--interval", "0,2", b040}).code == 2);
}

TEST_CASE("alpha prints the independence number and a witness") {
  RunResult r = run_cli({"alpha", graph6_encode(cycle(5))});
  CHECK(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "2");
  std::istringstream ws(lines[1]);
  int a = -1, b = -1;
  ws >> a >> b;
  Graph c5 = cycle(5);
  CHECK(a >= 0);
  CHECK(b > a);
  CHECK(!c5.has_edge(a, b));
}

TEST_CASE("iso reads positional and piped graphs") {
  std::string k4 = graph6_encode(complete(4)), c4 = graph6_encode(cycle(4));
  RunResult no = run_cli({"iso", k4, c4});
  CHECK(no.code == 0);
  CHECK(no.out == "non-isomorphic\n");
  RunResult yes = run_cli({"iso", "-", "-"},
                          graph6_encode(star(4)) + "\n" +
                              graph6_encode(complete_multipartite({1, 3})) + "\n");
  CHECK(yes.code == 0);
  CHECK(yes.out == "isomorphic\n");
}

TEST_CASE("enumerate lists the canonical catalog") {
  RunResult r = run_cli({"enumerate", "--n", "4", "--connected"});
  CHECK(r.code == 0);
  std::string want;
  for (const Graph& g : graphs(4, true)) want += graph6_encode(g) + "\n";
  CHECK(r.out == want);
  CHECK(lines_of(r.out).size() == 6);

  RunResult capped = run_cli({"enumerate", "--n", "10"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("error:") == 0);
  CHECK(run_cli({"enumerate", "--n", "0"}).code == 2);
}

TEST_CASE("verify emits schema-stable reports") {
  RunResult r = run_cli({"verify", "lower-bound", "--max-n", "5", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["check"] == "lower-bound");
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["max-n"] == "5");
  CHECK(j["counterexamples"].empty());
  CHECK(j["stats"]["graphs_examined"] == 29);

  RunResult sweep = run_cli({"verify", "alpha2-classification", "--max-n", "5", "--format",
                             "json"});
  CHECK(sweep.code == 0);
  json sj = json::parse(sweep.out);
  CHECK(sj["status"] == "pass");
  CHECK(sj["stats"]["graphs_examined"] == 27);

  RunResult text = run_cli({"verify", "interlacing", "--trials", "10", "--seed", "3"});
  CHECK(text.code == 0);
  CHECK(lines_of(text.out).at(0) ==
        "check                           status  graphs_examined  elapsed_ms");
}

TEST_CASE("verify output is deterministic apart from timing") {
  std::vector<std::string> args = {"verify", "multiplicity", "--max-n",  "5",
                                   "--trials", "20",          "--seed",  "7",
                                   "--format", "json"};
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.code == 0);
  json a = json::parse(first.out), b = json::parse(second.out);
  CHECK(a["stats"]["graphs_examined"] == 72);
  a["stats"].erase("elapsed_ms");
  b["stats"].erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("verify rejects bad invocations") {
  CHECK(run_cli({"verify", "no-such-check"}).code == 2);
  CHECK(run_cli({"verify", "lower-bound", "--max-n", "12"}).code == 3);
  CHECK(run_cli({"verify", "lower-bound", "--jobs", "0"}).code == 2);
  CHECK(run_cli({"verify", "lower-bound", "--format", "xml"}).code == 2);
}

TEST_CASE("dls subcommand") {
  RunResult r = run_cli({"dls", "--max-n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(run_cli({"dls", "--max-n", "10"}).code == 3);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"charpoly"}).code == 2);
  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(!help.out.empty());
  CHECK(run_cli({"construct", "--help"}).code == 0);
}
