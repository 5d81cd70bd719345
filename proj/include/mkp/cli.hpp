#pragma once

// Command implementations behind the `mkp` executable. Each command takes
// parsed options plus output/error streams and returns the process exit
// code, so the same code paths are exercised by tests and by the binary.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mkp/approx.hpp"
#include "mkp/core.hpp"
#include "mkp/exact.hpp"
#include "mkp/rational.hpp"
#include "mkp/reductions.hpp"

namespace mkp::cli {

/// Exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,     // parse failure, dimension mismatch, bad argument
  kGuardRefusal = 3,   // a work/memory guard would be exceeded
  kCheckFailed = 4,    // verify: infeasible schedule; bench: some rows failed
};

struct Guards {
  std::size_t brute_cells = kDefaultBruteForceCells;
  double dp_entries = kDefaultDpTableEntries;
  double ptas_work = kDefaultPtasWork;
};

/// Applies "brute=20,dp=1e8,ptas=1e9" style overrides (any subset, any
/// order) on top of `base`. Throws ArgumentError on malformed text.
Guards parse_guards(std::string_view spec, Guards base);

/// Built-in defaults, overridden by the MKP_GUARDS environment variable
/// when it is set.
Guards default_guards();

struct AlgoParams {
  std::optional<Rational> epsilon;
  std::optional<std::size_t> ell;
  std::string inner = "ptas";  // ptas-general interval solver: ptas | dp
};

/// Outcome of one solver run; `schedule` is absent for lp-bound.
struct RunRecord {
  std::string instance;
  std::string algorithm;
  AlgoParams params;
  Guards guards;
  std::optional<Schedule> schedule;
  ObjectiveBreakdown breakdown;
  bool feasible = true;
  std::optional<Rational> lp_bound;
  std::optional<std::size_t> fractional_objects;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> horizon;
  std::uint64_t lp_solves = 0;
  std::uint64_t assignments_examined = 0;
  std::uint64_t schedules_examined = 0;
  std::uint64_t dp_table_entries = 0;
  double wall_ms = 0;
};

/// Algorithms: brute, dp, lp-bound, round-lp, ptas, ptas-general.
bool is_known_algorithm(std::string_view name);

/// Dispatches to the solvers. Throws library errors unchanged.
RunRecord run_algorithm(const Instance& inst, std::string_view algorithm, const AlgoParams& params,
                        const Guards& guards);

/// Result document ("mkp-result 1"). Timing is emitted only on request so
/// that documents are byte-identical across runs by default.
void write_result(std::ostream& out, const RunRecord& record, bool timing);

struct SolveOptions {
  std::string instance_path;
  std::string algorithm;
  AlgoParams params;
  Guards guards;
  std::string out_path;      // empty: write to `out`
  std::string dump_lp_path;  // optional CPLEX LP dump of the relaxation
  bool timing = false;
};
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string instance_path;
  std::string schedule_path;
};
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string family;      // random | independent-set | two-kp
  RandomParams random;     // family=random
  std::string input_path;  // graph or 2-KP file
  std::string out_path;    // empty: write to `out`
};
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string manifest_path;
  std::string out_path;  // empty: write to `out`
  Guards guards;
  bool timing = false;
};
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Maps an in-flight exception to an exit code and reports it on `err`.
int report_exception(std::ostream& err);

}  // namespace mkp::cli
