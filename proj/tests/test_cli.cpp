#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flis/generators.hpp"
#include "flis/graph.hpp"
#include "flis/json_io.hpp"

using namespace flis;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FLIS_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/flis_cli_test_") + name;
}

}  // namespace

TEST_CASE("cli gen writes parseable edge lists") {
  const RunResult r = run_cli("gen hypercube 4");
  CHECK(r.exit_code == 0);
  const Graph g = Graph::from_edge_list(r.output);
  CHECK(g.order() == 16);
  CHECK(g.edge_count() == 32);

  const RunResult w = run_cli("gen wheel 6");
  CHECK(Graph::from_edge_list(w.output).order() == 7);

  const RunResult a = run_cli("gen random-gnp 30 0.2 --seed 7");
  const RunResult b = run_cli("gen random-gnp 30 0.2 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const RunResult bad = run_cli("gen cycle 2");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("cli gen emits graph json") {
  const RunResult r = run_cli("gen complete 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["n"] == 3);
  CHECK(j["edges"].size() == 3);
}

TEST_CASE("cli leaf-function table output is byte exact") {
  const RunResult r = run_cli("leaf-function --family hypercube --param 3 --solver bb");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 0 2 2 3 2 * * *\n");
}

TEST_CASE("cli leaf-function solvers and exit codes") {
  const std::string path = temp_path("p5.txt");
  {
    std::ofstream out(path);
    families::path(5).write_edge_list(out);
  }
  const RunResult tree = run_cli("leaf-function " + path + " --solver tree-dp");
  CHECK(tree.exit_code == 0);
  CHECK(tree.output == "0 0 2 2 2 2\n");

  const RunResult autod = run_cli("leaf-function " + path);
  CHECK(autod.output == tree.output);

  const std::string k3 = temp_path("k3.txt");
  {
    std::ofstream out(k3);
    families::complete(3).write_edge_list(out);
  }
  CHECK(run_cli("leaf-function " + k3 + " --solver tree-dp").exit_code == 2);
  CHECK(run_cli("leaf-function " + k3 + " --solver closed-form").exit_code == 2);
  CHECK(run_cli("leaf-function missing_file.txt --solver bb").exit_code == 1);
  CHECK(run_cli("leaf-function --family complete --param 4 --solver closed-form").output ==
        "0 0 2 * *\n");
  CHECK(run_cli("leaf-function --family nosuch --param 4").exit_code == 2);

  // a tiny budget cannot finish the 4-cube
  CHECK(run_cli("leaf-function --family hypercube --param 4 --solver bb --budget 10")
            .exit_code == 3);
}

TEST_CASE("cli witness output") {
  const RunResult r =
      run_cli("leaf-function --family hypercube --param 3 --solver bb --witness 4");
  CHECK(r.exit_code == 0);
  REQUIRE(r.output.find("witness 4:") != std::string::npos);
  // parse the witness line and validate it
  const auto pos = r.output.find("witness 4:");
  std::istringstream line(r.output.substr(pos + 10));
  std::vector<VertexId> vs;
  int v;
  while (line >> v) vs.push_back(v);
  REQUIRE(vs.size() == 4);
  CHECK(leaf_count(families::hypercube(3), vs) == 3);
}

TEST_CASE("cli json output round-trips") {
  const RunResult r =
      run_cli("leaf-function --family wheel --param 6 --solver bb --format json --stats");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const LeafFunction lf = leaf_function_from_json(j);
  CHECK(lf == LeafFunction::from_table("0 0 2 2 3 2 * *"));
  CHECK(j["complete"] == true);
  CHECK(j["stats"].contains("visited"));
  CHECK(leaf_function_to_json(lf)["values"] == j["values"]);
}

TEST_CASE("cli csv output") {
  const RunResult r =
      run_cli("leaf-function --family complete --param 4 --solver brute --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "i,leaves\n0,0\n1,0\n2,2\n3,\n4,\n");
}

TEST_CASE("cli reduce-is") {
  const std::string path = temp_path("c5.txt");
  {
    std::ofstream out(path);
    families::cycle(5).write_edge_list(out);
  }
  const std::string out_path = temp_path("c5_reduced.txt");
  const RunResult r = run_cli("reduce-is " + path + " 2 -o " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "i=3 ell=2\n");
  std::ifstream in(out_path);
  const Graph h = Graph::from_edge_list(in);
  CHECK(h.order() == 6);
  CHECK(h.edge_count() == 10);
  CHECK(h.degree(5) == 5);
}

TEST_CASE("cli enumerate") {
  const std::string path = temp_path("k3_enum.txt");
  {
    std::ofstream out(path);
    families::complete(3).write_edge_list(out);
  }
  CHECK(run_cli("enumerate " + path).output == "7\n");
  const RunResult listed = run_cli("enumerate " + path + " --list");
  CHECK(listed.exit_code == 0);
  // 7 subtree lines plus the count line
  CHECK(std::count(listed.output.begin(), listed.output.end(), '\n') == 8);
}

TEST_CASE("cli bench") {
  const RunResult r = run_cli("bench 9 0.2,0.8 --seeds 1..5 --jobs 2");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,density,seed,visited_bound,visited_nobound,ms_bound,ms_nobound");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 10);

  auto strip_timing = [](const std::string& line) {
    // keep n,density,seed,visited_bound,visited_nobound
    std::size_t commas = 0, pos = 0;
    for (; pos < line.size(); ++pos)
      if (line[pos] == ',' && ++commas == 5) break;
    return line.substr(0, pos);
  };
  for (const auto& line : lines) {
    const auto head = strip_timing(line);
    // visited_bound <= visited_nobound
    std::istringstream fields(head);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(fields, tok, ',')) parts.push_back(tok);
    REQUIRE(parts.size() == 5);
    CHECK(std::stoull(parts[3]) <= std::stoull(parts[4]));
  }

  const RunResult again = run_cli("bench 9 0.2,0.8 --seeds 1..5 --jobs 1");
  std::istringstream in2(again.output);
  std::getline(in2, header);
  std::vector<std::string> lines2;
  for (std::string line; std::getline(in2, line);) lines2.push_back(line);
  REQUIRE(lines2.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(strip_timing(lines[i]) == strip_timing(lines2[i]));
}
