#include "stareig/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

using namespace stareig;

namespace {

RunConfig make_config(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  return cfg;
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const Check& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string write_matrix_file(const std::string& name, const std::string& content) {
  std::string path = "stareig_cli_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(STAREIG_CLI_PATH) + " " + args;
  int ret = std::system(cmd.c_str());
#ifndef _WIN32
  if (WIFEXITED(ret)) return WEXITSTATUS(ret);
#endif
  return ret;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("graph-stats command") {
  RunConfig cfg = make_config("graph-stats");
  Report r = run_command(cfg);
  CHECK(r.command == "graph-stats");
  CHECK(r.all_passed());
  CHECK(exit_code(r) == 0);
  REQUIRE(r.checks.size() == 3);
  for (const Check& c : r.checks) CHECK(c.status == Check::Status::Pass);

  const json& table = r.results.at("table");
  REQUIRE(table.size() == 3);
  CHECK(table[0].at("diameter") == 3);
  CHECK(table[1].at("diameter") == 4);
  CHECK(table[2].at("diameter") == 6);
  CHECK(table[1].at("order") == 24);
  CHECK(table[1].at("degree") == 3);
  for (const json& row : table) {
    CHECK(row.at("girth") == 6);
    CHECK(row.at("bipartite") == true);
    CHECK(row.at("matches") == true);
  }

  cfg.n = 2;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
  cfg.n = 3;
  cfg.n_max = 8;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
  cfg.n = 5;
  cfg.n_max = 4;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
}

TEST_CASE("verify command passes on the default range") {
  RunConfig cfg = make_config("verify");
  cfg.samples = 5;
  Report r = run_command(cfg);
  CHECK(r.all_passed());
  REQUIRE(r.checks.size() == 5);
  CHECK(find_check(r, "basis-rank")->status == Check::Status::Pass);
  CHECK(find_check(r, "eigenvalue-equation")->status == Check::Status::Pass);
  CHECK(find_check(r, "matrix-correspondence")->status == Check::Status::Pass);
  CHECK(find_check(r, "crc-quotient")->status == Check::Status::Pass);
  CHECK(find_check(r, "theorem1-equality-family")->status == Check::Status::Pass);
}

TEST_CASE("verify fault injection fails exactly the eigenvalue check") {
  RunConfig cfg = make_config("verify");
  cfg.samples = 2;
  cfg.n = 3;
  cfg.n_max = 4;
  cfg.inject_fault = true;
  Report r = run_command(cfg);
  CHECK_FALSE(r.all_passed());
  CHECK(exit_code(r) == 1);
  CHECK(find_check(r, "eigenvalue-equation")->status == Check::Status::Fail);
  CHECK(find_check(r, "basis-rank")->status == Check::Status::Pass);
  CHECK(find_check(r, "matrix-correspondence")->status == Check::Status::Pass);
  CHECK(find_check(r, "crc-quotient")->status == Check::Status::Pass);
  CHECK(find_check(r, "theorem1-equality-family")->status == Check::Status::Pass);
}

TEST_CASE("verify skips everything above the caps") {
  RunConfig cfg = make_config("verify");
  cfg.n = 8;
  Report r = run_command(cfg);
  REQUIRE(r.checks.size() == 5);
  for (const Check& c : r.checks) CHECK(c.status == Check::Status::Skip);
  CHECK(r.all_passed());
}

TEST_CASE("min-support command") {
  SECTION("exact at n = 3") {
    RunConfig cfg = make_config("min-support");
    Report r = run_command(cfg);
    CHECK(r.all_passed());
    CHECK(r.results.at("method") == "exact-dim2");
    CHECK(r.results.at("best_support") == 4);
    CHECK(r.results.at("bound") == 4);
    CHECK(r.results.at("proven_optimal") == true);
    CHECK(r.results.at("optimal_witnesses").size() == 3);
    CHECK(find_check(r, "minimum-found")->status == Check::Status::Pass);
  }

  SECTION("grid at n = 4 stays heuristic") {
    RunConfig cfg = make_config("min-support");
    cfg.n = 4;
    cfg.radius = 1;
    Report r = run_command(cfg);
    CHECK(r.all_passed());
    CHECK(r.results.at("method") == "grid");
    CHECK(r.results.at("best_support") == 12);
    CHECK(r.results.at("bound") == 12);
    CHECK(r.results.at("proven_optimal") == false);
    REQUIRE(r.checks.size() == 2);
    CHECK(find_check(r, "heuristic-upper-bound")->status == Check::Status::Info);
    CHECK(find_check(r, "witness-consistency")->status == Check::Status::Pass);
    CHECK(find_check(r, "below-theorem-bound") == nullptr);
  }

  SECTION("range validation") {
    RunConfig cfg = make_config("min-support");
    cfg.n = 7;
    CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
  }
}

TEST_CASE("fuzz-theorem1 command") {
  RunConfig cfg = make_config("fuzz-theorem1");
  cfg.n = 5;
  cfg.samples = 10;
  Report r = run_command(cfg);
  CHECK(r.all_passed());
  CHECK(r.results.at("bound") == 48);
  CHECK(r.results.at("samples") == 10);
  CHECK(r.results.at("seed") == 12345);
  CHECK(r.results.at("min_g").get<std::uint64_t>() >= 48);
  CHECK(find_check(r, "lower-bound")->status == Check::Status::Pass);
  CHECK(find_check(r, "equality-classification")->status == Check::Status::Pass);

  cfg.n = 9;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
  cfg.force_large_n = true;
  cfg.n = 13;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
  cfg.n = 5;
  cfg.samples = 0;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
}

TEST_CASE("classify command") {
  SECTION("single-row template") {
    std::string path = write_matrix_file(
        "m2.json",
        R"({"n": 4, "entries": [[0,0,0,0],[0,0,0,0],[0,5,0,-5],[0,0,0,0]]})");
    RunConfig cfg = make_config("classify");
    cfg.matrix_file = path;
    Report r = run_command(cfg);
    std::remove(path.c_str());
    CHECK(r.all_passed());
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == Check::Status::Info);
    CHECK(r.checks[0].detail == "single-row (x = 5, q1 = 2, q2 = 4, tau = 3)");
    CHECK(r.results.at("special") == true);
    CHECK(r.results.at("theta") == 3);
    CHECK(r.results.at("class").at("kind") == "single-row");
    CHECK(r.results.at("rows")[2].at("kind") == "pair");
  }

  SECTION("uniform-pair template") {
    std::string path = write_matrix_file(
        "m1.json",
        R"({"n": 4, "entries": [[0,0,0,0],[0,3,0,-3],[0,3,0,-3],[0,3,0,-3]]})");
    RunConfig cfg = make_config("classify");
    cfg.matrix_file = path;
    Report r = run_command(cfg);
    std::remove(path.c_str());
    CHECK(r.checks[0].detail == "uniform-pair (x = 3, p1 = 2, p2 = 4)");
    CHECK(r.results.at("theta") == 1);
  }

  SECTION("a non-special matrix still classifies, flagged in the detail") {
    std::string path = write_matrix_file(
        "ns.json", R"({"n": 3, "entries": [[1,0,0],[0,1,-1],[0,1,-1]]})");
    RunConfig cfg = make_config("classify");
    cfg.matrix_file = path;
    Report r = run_command(cfg);
    std::remove(path.c_str());
    CHECK(r.all_passed());
    CHECK(r.results.at("special") == false);
    CHECK(r.checks[0].detail.find("not special") != std::string::npos);
  }

  SECTION("errors") {
    RunConfig cfg = make_config("classify");
    CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
    cfg.matrix_file = "stareig_cli_missing.json";
    CHECK_THROWS_AS(run_command(cfg), std::runtime_error);

    std::string tiny = write_matrix_file("tiny.json", R"({"n": 2, "entries": [[0,0],[0,0]]})");
    cfg.matrix_file = tiny;
    CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
    std::remove(tiny.c_str());
  }
}

TEST_CASE("partition-check command") {
  RunConfig cfg = make_config("partition-check");
  cfg.n = 7;
  cfg.n_max = 9;
  Report r = run_command(cfg);
  CHECK(r.all_passed());
  const json& table = r.results.at("table");
  REQUIRE(table.size() == 3);
  CHECK(table[0].at("exceptions") == json::array({{5, 1, 1}}));
  CHECK(table[2].at("exceptions") == json::array({{7, 1, 1}}));

  cfg.n = 6;
  CHECK_THROWS_AS(run_command(cfg), std::invalid_argument);
}

TEST_CASE("crc-check command") {
  RunConfig cfg = make_config("crc-check");
  cfg.n = 3;
  cfg.n_max = 4;
  Report r = run_command(cfg);
  CHECK(r.all_passed());
  const json& table = r.results.at("table");
  REQUIRE(table.size() == 2);
  CHECK(table[0].at("cosets") == 6);
  CHECK(table[0].at("matched") == 6);
  CHECK(table[1].at("cosets") == 12);
  CHECK(table[1].at("expected_quotient") == json::parse("[[2,1,0],[1,0,2],[0,1,2]]"));
}

TEST_CASE("unknown command rejected") {
  CHECK_THROWS_AS(run_command(make_config("frobnicate")), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  RunConfig cfg = make_config("fuzz-theorem1");
  cfg.n = 4;
  cfg.samples = 5;
  std::string a = render_report(run_command(cfg), Format::Json);
  std::string b = render_report(run_command(cfg), Format::Json);
  CHECK(a == b);

  json parsed = json::parse(a);
  CHECK(parsed.at("version") == std::string(kVersion));
  CHECK(parsed.at("parameters").at("seed") == 12345);
  CHECK(parsed.at("passed") == true);
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "demo";
  r.checks.push_back({"plain", Check::Status::Pass, "all good"});
  r.checks.push_back({"tricky", Check::Status::Fail, "has, comma and \"quote\""});
  r.checks.push_back({"note", Check::Status::Info, "fyi"});

  std::string text = render_report(r, Format::Text);
  CHECK(text.find("stareig " + std::string(kVersion) + " demo\n") == 0);
  CHECK(text.find("[PASS] plain: all good\n") != std::string::npos);
  CHECK(text.find("[FAIL] tricky: has, comma and \"quote\"\n") != std::string::npos);
  CHECK(text.find("[INFO] note: fyi\n") != std::string::npos);
  CHECK(text.find("result: fail\n") != std::string::npos);

  std::string csv = render_report(r, Format::Csv);
  CHECK(csv.find("# stareig " + std::string(kVersion) + "\n") == 0);
  CHECK(csv.find("command,check,status,detail\n") != std::string::npos);
  CHECK(csv.find("demo,plain,pass,all good\n") != std::string::npos);
  CHECK(csv.find("demo,tricky,fail,\"has, comma and \"\"quote\"\"\"\n") != std::string::npos);

  CHECK(exit_code(r) == 1);
  r.checks.erase(r.checks.begin() + 1);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("binary end to end") {
  CHECK(run_binary("graph-stats --n 3 --format json --out stareig_cli_smoke.json "
                   "2> stareig_cli_smoke.err") == 0);
  {
    std::ifstream in("stareig_cli_smoke.json");
    REQUIRE(in.good());
    json parsed = json::parse(in);
    CHECK(parsed.at("version") == std::string(kVersion));
    CHECK(parsed.at("passed") == true);
  }
  std::remove("stareig_cli_smoke.json");
  std::remove("stareig_cli_smoke.err");

  CHECK(run_binary("verify --n 3 --samples 2 --inject-fault --format text "
                   "> stareig_cli_fault.txt 2>&1") == 1);
  std::remove("stareig_cli_fault.txt");

  CHECK(run_binary("classify stareig_cli_nonexistent.json > /dev/null 2>&1") == 2);
  CHECK(run_binary("graph-stats --n 9 > /dev/null 2>&1") == 2);
  CHECK(run_binary("--version > /dev/null 2>&1") == 0);
}
