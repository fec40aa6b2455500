#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrangeo/arrangement.hpp"
#include "arrangeo/cli.hpp"
#include "arrangeo/json_io.hpp"
#include "doctest.h"

using namespace arrangeo;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Temp file that removes itself; contents written on construction.
struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& contents)
      : path("/tmp/arrangeo_test_" + name) {
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("weighted digraph json round-trips") {
  const WeightedDigraph wg(Digraph({1, 2, 4}, {{2, 1}, {4, 2}}),
                           {{1, 0}, {2, 3}, {4, 1}});
  const nlohmann::json j = to_json(wg);
  CHECK(j["vertices"] == nlohmann::json({1, 2, 4}));
  CHECK(j["edges"] == nlohmann::json({{2, 1}, {4, 2}}));
  CHECK(j["weights"]["2"] == 3);
  CHECK(weighted_digraph_from_json(j) == wg);
  CHECK(weighted_digraph_from_string(j.dump()) == wg);

  // Weights are optional and default to zero.
  const WeightedDigraph bare =
      weighted_digraph_from_string(R"({"vertices":[1,2],"edges":[[2,1]]})");
  CHECK(bare.weight(1) == 0);
  CHECK(bare.weight(2) == 0);
}

TEST_CASE("json diagnostics name the offending field") {
  auto message = [](const std::string& text) {
    try {
      weighted_digraph_from_string(text);
      return std::string("(no error)");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
  };
  CHECK(message("[1,2]") == "input: expected a JSON object");
  CHECK(message(R"({"edges":[]})") ==
        "input.vertices: expected an array of integers");
  CHECK(message(R"({"vertices":[1,"x"]})") ==
        "input.vertices: expected an array of integers");
  CHECK(message(R"({"vertices":[1,2],"edges":[[1,2],[1]]})") ==
        "input.edges[1]: expected a pair of integers");
  CHECK(message(R"({"vertices":[1,2],"weights":{"bad":1}})") ==
        "input.weights.bad: key is not a vertex label");
  CHECK(message(R"({"vertices":[1,2],"weights":{"4":1}})") ==
        "input.weights.4: vertex is not declared");
  CHECK(message(R"({"vertices":[1,2],"weights":{"2":-1}})") ==
        "input.weights.2: negative weight");
  CHECK(message(R"({"vertices":[1,2],"edges":[[1,1]]})") ==
        "input: digraph: loop edge (1)");
  CHECK(contains(message("not json"), "input: "));
}

TEST_CASE("arrangement json lists walls with an optional cone marker") {
  const Arrangement a = build_arrangement(shi_model(2, 0));
  const nlohmann::json affine = to_json(a);
  REQUIRE(affine.is_array());
  CHECK(affine.size() == 2);
  CHECK(affine[0] == nlohmann::json({{"i", 1}, {"j", 2}, {"c", 0}}));
  CHECK(arrangement_from_json(affine, a.coordinates()) == a);

  const Arrangement c = cone(a);
  const nlohmann::json coned = to_json(c);
  CHECK(coned.size() == 3);
  CHECK(coned[0] == nlohmann::json({{"z0", true}}));
  CHECK(arrangement_from_json(coned, c.coordinates()) == c);

  CHECK(to_json(WallChoice{1, 4, 2}) ==
        nlohmann::json({{"s", 1}, {"t", 4}, {"w", 2}}));
}

TEST_CASE("analyze prints the freeness summary") {
  const CliResult r = run_cli({"analyze", "--shi", "3", "0", "--charpoly"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "digraph: 3 vertices, 3 edges, total weight 0"));
  CHECK(contains(r.out, "hyperplanes: 6 (cone: 7)"));
  CHECK(contains(r.out, "free: yes"));
  CHECK(contains(r.out, "order: 3 < 2 < 1"));
  CHECK(contains(r.out, "exponents: {0, 1, 3, 3}"));
  CHECK(contains(r.out, "charpoly (affine): t^3 - 6t^2 + 9t"));
  CHECK(contains(r.out, "charpoly (cone): t^4 - 7t^3 + 15t^2 - 9t"));
  CHECK(contains(r.out, "charpoly (cone) factored: t (t - 1) (t - 3)^2"));
  CHECK(contains(r.out, "methods agree: mobius = delrest = formula"));
}

TEST_CASE("analyze lists walls and essentialized exponents on demand") {
  const CliResult r =
      run_cli({"analyze", "--shi", "2", "0", "--walls", "--essential"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "walls:\n  x1 - x2 = 0\n  x1 - x2 = 1\n"));
  CHECK(contains(r.out, "exponents: {0, 1, 2}"));
  CHECK(contains(r.out, "exponents (essential): {1, 2}"));
}

TEST_CASE("analyze reads json input and reports obstructions") {
  const TempFile file(
      "g10.json",
      R"({"vertices":[1,2,3],"edges":[[2,1],[1,3],[3,2]],"weights":{"1":0,"2":0,"3":0}})");
  const CliResult r = run_cli({"analyze", "--input", file.path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "free: no"));
  CHECK(contains(r.out, "obstruction: G10 on vertices {1, 2, 3}"));

  const CliResult asserted =
      run_cli({"analyze", "--input", file.path, "--assert"});
  CHECK(asserted.code == 1);

  const CliResult fine = run_cli({"analyze", "--shi", "3", "0", "--assert"});
  CHECK(fine.code == 0);
}

TEST_CASE("charpoly methods print identical polynomials") {
  std::string line;
  for (const std::string method : {"mobius", "delrest", "formula"}) {
    const CliResult r =
        run_cli({"charpoly", "--shi", "3", "0", "--method", method});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "charpoly: t^3 - 6t^2 + 9t"));
    CHECK(contains(r.out, "factored: t (t - 3)^2"));
    if (line.empty()) line = r.out.substr(r.out.find("charpoly:"));
  }
  const CliResult coned =
      run_cli({"charpoly", "--shi", "3", "0", "--method", "formula", "--cone"});
  CHECK(contains(coned.out, "charpoly: t^4 - 7t^3 + 15t^2 - 9t"));
  CHECK(contains(coned.out, "factored: t (t - 1) (t - 3)^2"));
}

TEST_CASE("charpoly counts points over a finite field") {
  const CliResult r = run_cli(
      {"charpoly", "--catalan", "3", "1", "--method", "ff", "--prime", "13"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "points avoiding all walls: 936"));
  CHECK(contains(r.out,
                 "validity: q > 11, count equals the characteristic "
                 "polynomial at q"));

  CHECK(run_cli({"charpoly", "--catalan", "3", "1", "--method", "ff"}).code ==
        2);
  const CliResult composite = run_cli(
      {"charpoly", "--catalan", "3", "1", "--method", "ff", "--prime", "9"});
  CHECK(composite.code == 2);
  CHECK(contains(composite.err, "error: "));
}

TEST_CASE("charpoly formula refuses non-free inputs with exit 2") {
  const TempFile file(
      "g3.json", R"({"vertices":[1,2,3],"edges":[[2,1],[1,3]]})");
  const CliResult r =
      run_cli({"charpoly", "--input", file.path, "--method", "formula"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error: "));
  // The poset method still works on the same input.
  const CliResult mobius =
      run_cli({"charpoly", "--input", file.path, "--method", "mobius"});
  CHECK(mobius.code == 0);
  CHECK(contains(mobius.out, "charpoly: t^3 - 5t^2 + 7t"));
}

TEST_CASE("contract prints the wall, relabeling, and restriction") {
  const CliResult r =
      run_cli({"contract", "--shi", "4", "0", "--wall", "1", "3", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "wall: x1 - x3 = 1"));
  CHECK(contains(r.out, "relabeling: s=1, t=3 -> u=5"));
  CHECK(contains(
      r.out,
      R"(result: {"edges":[[4,2],[4,5]],"vertices":[2,4,5],"weights":{"2":0,"4":0,"5":1}})"));
  CHECK(contains(r.out, "restriction walls:"));
  CHECK(contains(r.out, "  x2 - x4 = 0"));
  CHECK(contains(r.out, "  x5 - x4 = 1"));

  const CliResult bad =
      run_cli({"contract", "--shi", "4", "0", "--wall", "1", "3", "9"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "error: "));
}

TEST_CASE("closure lists nodes with chains") {
  const CliResult r = run_cli({"closure", "--shi", "3", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closure nodes: 6"));
  CHECK(contains(r.out, "node 0: l=3, edges=3, weight=0, chain=(empty)"));
  CHECK(contains(r.out, "node 1: l=2, edges=1, weight=0, chain=(s=1, t=2, w=0)"));

  const CliResult bounded =
      run_cli({"closure", "--shi", "3", "0", "--max-depth", "1"});
  CHECK(contains(bounded.out,
                 "bounded search: guards are active, the closure may be "
                 "incomplete"));

  const CliResult as_json = run_cli({"closure", "--catalan", "3", "1", "--json"});
  CHECK(as_json.code == 0);
  std::istringstream lines(as_json.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "closure nodes: 3");
  int parsed = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json node = nlohmann::json::parse(line);
    CHECK(node.contains("chain"));
    CHECK(node.contains("vertices"));
    ++parsed;
  }
  CHECK(parsed == 3);
}

TEST_CASE("hereditary reports the frozen six-vertex counterexample") {
  const CliResult r = run_cli({"hereditary", "--shi", "6", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "hereditarily free: no"));
  CHECK(contains(r.out, "nodes visited: 159"));
  CHECK(contains(r.out,
                 "witness chain (3 walls, on canonical labels): "
                 "(s=1, t=4, w=0) -> (s=1, t=3, w=1) -> (s=1, t=2, w=0)"));
  CHECK(contains(
      r.out,
      R"(failing node: {"edges":[[1,2],[2,1],[2,3],[3,1]],"vertices":[1,2,3],"weights":{"1":0,"2":0,"3":1}})"));
  CHECK(run_cli({"hereditary", "--shi", "6", "0", "--assert"}).code == 1);

  const CliResult yes = run_cli({"hereditary", "--shi", "5", "0"});
  CHECK(contains(yes.out, "hereditarily free: yes"));
  CHECK(contains(yes.out, "nodes visited: 75"));
  CHECK(run_cli({"hereditary", "--shi", "5", "0", "--assert"}).code == 0);
}

TEST_CASE("reproduce is deterministic and complete") {
  const CliResult a = run_cli({"reproduce"});
  const CliResult b = run_cli({"reproduce"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "# Three-vertex catalogue"));
  CHECK(contains(a.out, "## Table 4"));
  CHECK(contains(a.out, "| exponents | 0, 1, N+1, N+2 |"));
  CHECK(contains(a.out, "# Contraction-closure dichotomy"));
  CHECK(contains(a.out, "| shi l=5 m=0 | yes | yes | 75 |"));
  CHECK(contains(a.out, "| shi l=6 m=0 | yes | no | 159 |"));
  CHECK(contains(a.out, "shi l=8 m=1 contracts along x6 = x7 = x8 to shi "
                        "l=6 m=1: yes"));

  const CliResult tables = run_cli({"reproduce", "--tables"});
  CHECK(contains(tables.out, "# Three-vertex catalogue"));
  CHECK(!contains(tables.out, "# Contraction-closure dichotomy"));
  const CliResult dich = run_cli({"reproduce", "--dichotomy"});
  CHECK(!contains(dich.out, "# Three-vertex catalogue"));
  CHECK(contains(dich.out, "# Contraction-closure dichotomy"));
}

TEST_CASE("input errors exit with code 2 and a diagnostic") {
  const CliResult missing = run_cli({"analyze", "--input", "/nonexistent.json"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "error: input: cannot open /nonexistent.json"));

  const TempFile bad("bad.json", "not json");
  const CliResult parse = run_cli({"analyze", "--input", bad.path});
  CHECK(parse.code == 2);
  CHECK(contains(parse.err, "error: input: "));

  const CliResult conflict =
      run_cli({"analyze", "--shi", "3", "0", "--catalan", "3", "0"});
  CHECK(conflict.code == 2);
  CHECK(contains(conflict.err,
                 "error: input: give exactly one of --input, --shi, --catalan"));

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"analyze"}).code == 2);
  CHECK(run_cli({"analyze", "--shi", "3"}).code == 2);  // needs two values

  const CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "Usage: arrangeo"));
}
