// mkp: multistage knapsack solvers, verifier, generators and benchmarks.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mkp/cli.hpp"
#include "mkp/error.hpp"

namespace {

using namespace mkp;

void add_guard_flags(CLI::App* cmd, std::string& guard_spec) {
  cmd->add_option("--guards", guard_spec,
                  "Override work guards, e.g. brute=20,dp=1e8,ptas=1e9 (default from MKP_GUARDS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multistage knapsack toolkit"};
  app.require_subcommand(1);

  std::string guard_spec;
  std::string epsilon_text;
  std::size_t ell = 0;

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and write a result document");
  solve_cmd->add_option("instance", solve.instance_path, "Instance file")->required();
  solve_cmd->add_option("-a,--algo", solve.algorithm, "brute | dp | lp-bound | round-lp | ptas | ptas-general")
      ->required();
  solve_cmd->add_option("-e,--epsilon", epsilon_text, "Accuracy for ptas variants (e.g. 0.3 or 3/10)");
  auto* ell_opt = solve_cmd->add_option("--ell", ell, "Guessed-set size override for ptas");
  solve_cmd->add_option("--inner", solve.params.inner, "Interval solver for ptas-general: ptas | dp");
  solve_cmd->add_option("-o,--out", solve.out_path, "Result file (default: stdout)");
  solve_cmd->add_option("--dump-lp", solve.dump_lp_path, "Also write the LP relaxation in CPLEX LP format");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall-clock time in the result");
  add_guard_flags(solve_cmd, guard_spec);

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against an instance");
  verify_cmd->add_option("instance", verify.instance_path, "Instance file")->required();
  verify_cmd->add_option("schedule", verify.schedule_path, "Schedule or result document")->required();

  cli::GenOptions gen;
  std::string capacity_text = "1/2";
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("family", gen.family, "random | independent-set | two-kp")->required();
  gen_cmd->add_option("-i,--input", gen.input_path, "Graph edge list or 2-KP file for reduction families");
  gen_cmd->add_option("-o,--out", gen.out_path, "Instance file (default: stdout)");
  gen_cmd->add_option("--seed", gen.random.seed, "PRNG seed");
  gen_cmd->add_option("-n,--objects", gen.random.objects, "Number of objects");
  gen_cmd->add_option("-T,--steps", gen.random.steps, "Number of time steps");
  gen_cmd->add_option("--weight-min", gen.random.weight_min, "Smallest weight");
  gen_cmd->add_option("--weight-max", gen.random.weight_max, "Largest weight");
  gen_cmd->add_option("--profit-max", gen.random.profit_max, "Largest profit");
  gen_cmd->add_option("--bonus-max", gen.random.bonus_max, "Largest bonus");
  gen_cmd->add_option("--capacity", capacity_text,
                      "Capacity rule: 'ratio:R' (C_t = floor(R * total weight of step t)) or 'fixed:C'");

  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest of instance x algorithm rows");
  bench_cmd->add_option("manifest", bench.manifest_path, "Manifest file")->required();
  bench_cmd->add_option("-o,--out", bench.out_path, "Table file (default: stdout)");
  bench_cmd->add_flag("--timing", bench.timing, "Add a wall-clock column");
  add_guard_flags(bench_cmd, guard_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  try {
    const cli::Guards guards = cli::parse_guards(guard_spec, cli::default_guards());
    if (solve_cmd->parsed()) {
      solve.guards = guards;
      if (!epsilon_text.empty()) solve.params.epsilon = parse_rational(epsilon_text);
      if (*ell_opt) solve.params.ell = ell;
      return cli::cmd_solve(solve, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) return cli::cmd_verify(verify, std::cout, std::cerr);
    if (gen_cmd->parsed()) {
      const auto colon = capacity_text.find(':');
      const std::string kind = colon == std::string::npos ? "ratio" : capacity_text.substr(0, colon);
      const std::string value = colon == std::string::npos ? capacity_text : capacity_text.substr(colon + 1);
      if (kind == "ratio") {
        gen.random.capacity = CapacityRatio{parse_rational(value)};
      } else if (kind == "fixed") {
        const Rational c = parse_rational(value);
        if (!is_integral(c)) throw ArgumentError("fixed capacity must be an integer");
        gen.random.capacity = FixedCapacity{ceil_to_int64(c)};
      } else {
        throw ArgumentError("capacity rule must be 'ratio:R' or 'fixed:C'");
      }
      return cli::cmd_gen(gen, std::cout, std::cerr);
    }
    if (bench_cmd->parsed()) {
      bench.guards = guards;
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (...) {
    return cli::report_exception(std::cerr);
  }
  return cli::kInternalError;
}
