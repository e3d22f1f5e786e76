#include <doctest.h>

#include "dshift/cli.hpp"
#include "dshift/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace dshift;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path fixture(const std::string& name, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "dshift_cli_tests";
    std::filesystem::create_directories(dir);
    std::filesystem::path path = dir / name;
    std::ofstream file(path);
    file << content;
    return path;
}

const char* kSchwarzPick = R"({
  "version": "1",
  "kind": "pick",
  "payload": {
    "d": 1,
    "nodes": [[[0, 0]], [[0.5, 0]]],
    "targets": [[[[0, 0]]], [[[0.25, 0]]]],
    "variant": "ball",
    "transposed": false
  }
})";

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("problem files round-trip through the typed converters") {
    Json file = Json::parse(kSchwarzPick);
    PickProblem p = pick_problem_from_json(file["payload"]);
    Json back = pick_problem_to_json(p);
    CHECK(pick_problem_from_json(back).nodes.size() == p.nodes.size());
    CHECK(dump_deterministic(back) == dump_deterministic(pick_problem_to_json(
                                          pick_problem_from_json(back))));

    Json ideal = {{"d", 1},
                  {"functionals",
                   Json::array({{{"base", Json::array({Json::array({0.0, 0.0})})},
                                 {"terms", Json::array({{{"alpha", Json::array({1})},
                                                         {"coeff", Json::array({1.0, 0.0})}}})}},
                                {{"base", Json::array({Json::array({0.0, 0.0})})},
                                 {"terms", Json::array({{{"alpha", Json::array({0})},
                                                         {"coeff", Json::array({2.0, 0.0})}}})}}})},
                  {"generators", Json::array()},
                  {"boundary_nodes", Json::array()}};
    IdealSpec spec = ideal_spec_from_json(ideal);
    Json round = ideal_spec_to_json(spec);
    CHECK(dump_deterministic(round) ==
          dump_deterministic(ideal_spec_to_json(ideal_spec_from_json(round))));
}

TEST_CASE("pick check reports strict feasibility with exit zero") {
    auto path = fixture("schwarz.json", kSchwarzPick);
    CliResult r = run_cli({"pick", "check", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("strictly_feasible") != std::string::npos);

    CliResult n = run_cli({"pick", "norm", path.string()});
    CHECK(n.exit_code == 0);
    CHECK(n.out.find("0.5") != std::string::npos);
}

TEST_CASE("json reports are byte-identical across runs") {
    auto path = fixture("schwarz2.json", kSchwarzPick);
    CliResult first = run_cli({"--json", "pick", "check", path.string()});
    CliResult second = run_cli({"pick", "check", path.string(), "--json"});
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find('\t') == std::string::npos);
}

TEST_CASE("distance and metric subcommands") {
    CliResult r = run_cli({"dist", "--d", "1", "--x", "0", "--y", "0.5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cstar: 0.5") != std::string::npos);

    CliResult o = run_cli({"dist", "--d", "2", "--x", "0,0", "--y", "0.5,0", "--oracle"});
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("oracle") != std::string::npos);

    CliResult m = run_cli({"metric", "--d", "1", "--a", "0.5", "--dir", "1"});
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("gamma: 1.333333333333333") != std::string::npos);
}

TEST_CASE("complex literals in point flags") {
    CliResult r = run_cli({"dist", "--d", "2", "--x", "0.1+0.2i,-0.3i", "--y", "0,0"});
    CHECK(r.exit_code == 0);

    CliResult bad = run_cli({"dist", "--d", "2", "--x", "zebra,0", "--y", "0,0"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify suite passes end to end") {
    CliResult r = run_cli({"verify"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("grid emission") {
    CliResult r = run_cli({"grid", "dist", "--d", "1", "--min", "-0.5", "--max", "0.5",
                           "--steps", "3"});
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 10);  // header plus nine pairs
    CHECK(r.out.rfind("x,y,cstar,c", 0) == 0);

    CliResult single = run_cli({"grid", "dist", "--d", "1", "--min", "0.25", "--max", "0.25",
                                "--steps", "1"});
    CHECK(single.exit_code == 0);
    CHECK(count_lines(single.out) == 2);

    CliResult metric = run_cli({"grid", "metric", "--d", "2", "--min", "0", "--max", "0",
                                "--steps", "1"});
    CHECK(metric.exit_code == 0);
    CHECK(count_lines(metric.out) == 3);
    CHECK(metric.out.find(",1\n") != std::string::npos);

    CliResult outside = run_cli({"grid", "dist", "--d", "1", "--min", "-2", "--max", "0"});
    CHECK(outside.exit_code == 2);
}

TEST_CASE("exit codes for the error corpus") {
    CliResult missing = run_cli({"pick", "check", "/nonexistent/file.json"});
    CHECK(missing.exit_code == 2);

    auto mangled = fixture("mangled.json", "{ not json");
    CHECK(run_cli({"pick", "check", mangled.string()}).exit_code == 2);

    auto wrong_kind = fixture("wrongkind.json",
                              R"({"version":"1","kind":"distance","payload":{}})");
    CHECK(run_cli({"pick", "check", wrong_kind.string()}).exit_code == 2);

    // A scalar matrix has no two-dimensional algebra: numerical degeneracy.
    auto scalar = fixture("scalar.json",
                          R"({"matrix": [[[2,0],[0,0]],[[0,0],[2,0]]]})");
    CHECK(run_cli({"classify2", scalar.string()}).exit_code == 3);

    CliResult no_sub = run_cli({});
    CHECK(no_sub.exit_code == 2);

    CliResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("tolerances flow from file and flag") {
    // Boundary instance: |t| = r. A coarse file tolerance absorbs it into
    // the boundary verdict either way, but an explicit flag must win.
    std::string boundary = R"({
      "version": "1", "kind": "pick", "tol": 0.2,
      "payload": {"d": 1, "nodes": [[[0,0]],[[0.5,0]]],
                  "targets": [[[[0,0]]],[[[0.45,0]]]],
                  "variant": "ball", "transposed": false}})";
    auto path = fixture("tolfile.json", boundary);

    CliResult coarse = run_cli({"pick", "check", path.string()});
    CHECK(coarse.out.find("boundary") != std::string::npos);

    CliResult fine = run_cli({"pick", "check", path.string(), "--tol", "1e-9"});
    CHECK(fine.out.find("strictly_feasible") != std::string::npos);
}

TEST_CASE("batch mode reports in input order and folds exit codes") {
    std::string batch = R"([
      {"version":"1","kind":"distance","payload":{"d":1,"x":[[0,0]],"y":[[0.5,0]]}},
      {"version":"1","kind":"pick","payload":{"d": 3}},
      {"version":"1","kind":"classify2","payload":{"matrix":[[[0,0],[1,0]],[[0,0],[0,0]]]}}
    ])";
    auto path = fixture("batch.json", batch);
    CliResult r = run_cli({"--batch", path.string(), "--json"});
    CHECK(r.exit_code == 2);

    Json reports = Json::parse(r.out);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 3);
    CHECK(reports[0]["kind"] == "distance");
    CHECK(reports[1].contains("error"));
    CHECK(reports[2]["kind"] == "classify2");

    CliResult again = run_cli({"--batch", path.string(), "--json"});
    CHECK(again.out == r.out);
}
