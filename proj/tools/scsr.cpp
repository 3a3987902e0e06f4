// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

// scsr: command-line front end.
//
//   scsr solve  [FILE]   print a greedy superstring with reversals
//   scsr gen    FAMILY   print a generated instance
//   scsr bench           time the linear engine on growing random inputs
//   scsr reduce [FILE]   run the superstring-to-reversals reduction check
//
// Exit status: 0 success, 1 a result failed its own checks, 2 bad usage,
// unreadable input or an instance over the exact-oracle limit.

#include <scsr/harness.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

scsr::instance_family parse_family(std::string const& name)
{
  if (name == "tight") {
    return scsr::instance_family::tight;
  }
  if (name == "shredded") {
    return scsr::instance_family::shredded;
  }
  return scsr::instance_family::random;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Shortest common superstring with reversals"};
  // "--h" is the tight-family parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "lines";
  std::size_t limit_m = scsr::default_limit_m;

  // solve
  scsr::solve_options solve;
  std::string dot_path;
  auto* solve_cmd = app.add_subcommand("solve", "Print a greedy superstring with reversals");
  solve_cmd->add_option("input", input, "Input file, '-' for stdin")->capture_default_str();
  solve_cmd->add_option("--format", format, "Input format")
    ->check(CLI::IsMember({"lines", "fasta"}))
    ->capture_default_str();
  std::string engine = "linear";
  std::string policy = "canonical";
  solve_cmd->add_option("--engine", engine, "Greedy engine")
    ->check(CLI::IsMember({"linear", "naive"}))
    ->capture_default_str();
  solve_cmd->add_option("--policy", policy, "Tie-break policy")
    ->check(CLI::IsMember({"canonical", "adversarial-first-pair", "seeded-random"}))
    ->capture_default_str();
  solve_cmd->add_option("--seed", solve.policy.seed, "Seed for --policy seeded-random");
  solve_cmd->add_flag("--exact", solve.exact, "Also run the exact oracle");
  solve_cmd->add_option("--limit-m", limit_m, "Largest normalized instance the oracle accepts")
    ->capture_default_str();
  solve_cmd->add_flag("--stats", solve.stats, "Print run statistics as JSON on stderr");
  solve_cmd->add_flag("--explain", solve.explain, "Report strings dropped by normalization");
  solve_cmd->add_option("--dot", dot_path, "Write the chosen path collection as Graphviz");

  // gen
  scsr::instance_spec spec;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated instance");
  std::string family;
  gen_cmd->add_option("family", family, "Instance family")
    ->required()
    ->check(CLI::IsMember({"random", "tight", "shredded"}));
  gen_cmd->add_option("--seed", spec.seed)->capture_default_str();
  gen_cmd->add_option("--h", spec.h, "Tight family parameter")->capture_default_str();
  gen_cmd->add_option("--alphabet", spec.alphabet)->capture_default_str();
  gen_cmd->add_option("--count", spec.count)->capture_default_str();
  gen_cmd->add_option("--min-len", spec.min_length)->capture_default_str();
  gen_cmd->add_option("--max-len", spec.max_length)->capture_default_str();
  gen_cmd->add_option("--genome-len", spec.genome_length)->capture_default_str();
  gen_cmd->add_option("--fragment-len", spec.fragment_length)->capture_default_str();
  gen_cmd->add_option("--coverage", spec.coverage)->capture_default_str();
  gen_cmd->add_option("--flip-prob", spec.flip_probability)->capture_default_str();

  // bench
  scsr::bench_options bench;
  bench.sizes = {100000, 200000, 400000, 800000};
  auto* bench_cmd = app.add_subcommand("bench", "Time the linear engine");
  bench_cmd->add_option("--sizes", bench.sizes, "Total input lengths, ascending")
    ->delimiter(',')
    ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Timed runs per size")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  bench_cmd->add_flag("--raw", bench.raw, "Print every run instead of medians");

  // reduce
  std::size_t ell = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Check the reduction on a small instance");
  reduce_cmd->add_option("input", input, "Input file, '-' for stdin")->capture_default_str();
  reduce_cmd->add_option("--ell", ell, "Length bound of the classic instance")->required();
  reduce_cmd->add_option("--format", format, "Input format")
    ->check(CLI::IsMember({"lines", "fasta"}))
    ->capture_default_str();
  reduce_cmd->add_option("--limit-m", limit_m)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const status = app.exit(e);
    return status == 0 ? scsr::exit_ok : scsr::exit_usage;
  }

  try {
    if (*solve_cmd) {
      solve.engine = *scsr::parse_engine(engine);
      solve.policy.mode = *scsr::parse_tie_break(policy);
      solve.limit_m = limit_m;
      if (!dot_path.empty()) {
        solve.dot_path = dot_path;
      }
      auto const set = scsr::ingest_path(input, *scsr::parse_input_format(format));
      return scsr::cmd_solve(set, solve, std::cout, std::cerr);
    }
    if (*gen_cmd) {
      spec.family = parse_family(family);
      return scsr::cmd_gen(spec, std::cout);
    }
    if (*bench_cmd) {
      return scsr::cmd_bench(bench, std::cout);
    }
    if (*reduce_cmd) {
      auto const set = scsr::ingest_path(input, *scsr::parse_input_format(format));
      return scsr::cmd_reduce(set, ell, limit_m, std::cout, std::cerr);
    }
  } catch (scsr::invariant_violation const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return scsr::exit_invariant;
  } catch (scsr::error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return scsr::exit_usage;
  }
  return scsr::exit_usage;
}
