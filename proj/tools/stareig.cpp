#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stareig/cli.hpp"
#include "stareig/version.hpp"

namespace {

struct FlagValues {
  int n = 0;
  int n_max = 0;
  std::uint64_t seed = 12345;
  int radius = 2;
  int samples = 50;
  std::string format = "json";
  std::string out_path;
  bool force_large_n = false;
  bool inject_fault = false;
  std::string matrix_file;
};

void add_common_flags(CLI::App* cmd, FlagValues& v, bool ranged) {
  cmd->add_option("--n", v.n, "Smallest n (command default if omitted)");
  if (ranged) cmd->add_option("--n-max", v.n_max, "Largest n (defaults to --n)");
  cmd->add_option("--seed", v.seed, "Seed for randomized content (default 12345)");
  cmd->add_option("--format", v.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", v.out_path, "Write the report to this file instead of stdout");
}

int emit(const stareig::Report& report, const FlagValues& v) {
  std::string rendered = stareig::render_report(report, stareig::parse_format(v.format));
  if (v.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(v.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "stareig: cannot write " << v.out_path << "\n";
      return 2;
    }
    out << rendered;
  }
  return stareig::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tooling for eigenfunctions of the star graph"};
  app.set_version_flag("--version", std::string(stareig::kVersion));
  app.require_subcommand(1);

  FlagValues v;
  std::string command;

  CLI::App* graph = app.add_subcommand("graph-stats", "Order, degree, girth and diameter per n");
  add_common_flags(graph, v, true);

  CLI::App* verify = app.add_subcommand("verify", "Run the full property suite over an n range");
  add_common_flags(verify, v, true);
  verify->add_option("--samples", v.samples, "Random coefficient vectors per n (default 50)");
  verify->add_flag("--inject-fault", v.inject_fault)->group("");  // test hook, hidden

  CLI::App* minsup = app.add_subcommand("min-support", "Minimum-support search (exact at n = 3)");
  add_common_flags(minsup, v, false);
  minsup->add_option("--radius", v.radius, "Grid radius for n >= 4 (default 2)");

  CLI::App* fuzz = app.add_subcommand("fuzz-theorem1", "Random special matrices against the bound");
  add_common_flags(fuzz, v, false);
  fuzz->add_option("--samples", v.samples, "Number of random matrices (default 50)");
  fuzz->add_flag("--force-large-n", v.force_large_n, "Allow n up to 12 (slow)");

  CLI::App* classify = app.add_subcommand("classify", "Row forms and template class of a matrix file");
  add_common_flags(classify, v, false);
  classify->add_option("matrix", v.matrix_file, "JSON matrix file {n, entries}")->required();

  CLI::App* partition = app.add_subcommand("partition-check", "Partition dichotomy over an n range");
  add_common_flags(partition, v, true);

  CLI::App* crc = app.add_subcommand("crc-check", "Coset codes: covering radius and quotients");
  add_common_flags(crc, v, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  stareig::RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.n = v.n;
  cfg.n_max = v.n_max;
  cfg.seed = v.seed;
  cfg.radius = v.radius;
  cfg.samples = v.samples;
  cfg.matrix_file = v.matrix_file;
  cfg.out_path = v.out_path;
  cfg.force_large_n = v.force_large_n;
  cfg.inject_fault = v.inject_fault;
  try {
    cfg.format = stareig::parse_format(v.format);
    auto started = std::chrono::steady_clock::now();
    stareig::Report report = stareig::run_command(cfg);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::fprintf(stderr, "stareig: %s finished in %lld ms\n", cfg.command.c_str(),
                 static_cast<long long>(elapsed.count()));
    return emit(report, v);
  } catch (const std::exception& e) {
    std::cerr << "stareig: " << e.what() << "\n";
    return 2;
  }
}
