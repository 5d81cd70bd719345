#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mkp/core.hpp"
#include "mkp/rational.hpp"
#include "mkp/simplex.hpp"

namespace mkp {

/// LP rounding: solve the relaxation to an optimal vertex, normalize z, and
/// keep exactly the x(t,i) equal to 1.
struct RoundResult {
  Schedule schedule;
  FractionalSolution lp;  // normalized
  std::int64_t value = 0;
  Rational lp_value;
  FractionalObjects fractional;
  /// Sum over fractional objects of their LP reward; the rounding loses at
  /// most this much: value >= lp_value - fractional_reward_sum.
  Rational fractional_reward_sum;
};

/// Throws Error if the rounding loss bound is ever violated.
RoundResult round_lp(const Instance& inst, std::span<const StepObject> fixed_zero = {},
                     const std::optional<std::vector<std::int64_t>>& capacities = std::nullopt);

inline constexpr double kDefaultPtasWork = 1e9;

struct PtasOptions {
  Rational epsilon{1, 2};
  /// Replaces the guessed-set size. Without it the size is
  /// min(ceil((T+1) T^3 / epsilon), n), which carries the (1 - epsilon)
  /// guarantee; smaller values trade the guarantee for speed.
  std::optional<std::size_t> ell;
  /// Refuse when C(n, ell) * 2^(ell*T) exceeds this.
  double work_limit = kDefaultPtasWork;
};

struct PtasReport {
  Schedule best_schedule;
  ObjectiveBreakdown breakdown;
  std::int64_t value = 0;
  Rational epsilon;
  std::size_t ell = 0;
  std::uint64_t guessed_sets = 0;
  std::uint64_t assignments_examined = 0;
  std::uint64_t lp_solves = 0;
};

/// min(ceil((T+1) T^3 / epsilon), n). Throws ArgumentError if epsilon <= 0.
std::size_t ptas_ell(std::size_t steps, std::size_t objects, const Rational& epsilon);

/// Upper bound on guess-loop iterations: C(n, ell) * 2^(ell*T).
double ptas_work_estimate(std::size_t steps, std::size_t objects, std::size_t ell);

/// Constant-horizon approximation scheme.
///
/// For every set X of `ell` objects (lexicographic order) and every
/// per-step choice X_1..X_T of subsets of X that fits the capacities
/// (binary-counter order, step 1 outermost):
///   - g = smallest reward among X's objects under that choice;
///   - on the remaining objects, forbid x(t,i) whenever p(t,i) > g;
///   - round the LP on the remaining objects with capacities C_t - w_t(X_t);
///   - merge with X_t.
/// Returns the best merged schedule; the first one wins ties.
PtasReport ptas_constant(const Instance& inst, const PtasOptions& options);

/// Solves one sub-horizon at accuracy epsilon.
using IntervalSolver = std::function<PtasReport(const Instance& sub, const Rational& epsilon)>;

/// ptas_constant with `base` options (its epsilon is replaced per call).
IntervalSolver ptas_interval_solver(PtasOptions base = {});
/// Exact dynamic program on every interval.
IntervalSolver dp_interval_solver(double max_table_entries);

/// Inclusive 0-based step range.
struct Interval {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// ceil(2 / epsilon): the interval length used by ptas_general.
std::size_t ptas_horizon(const Rational& epsilon);

/// Partition of steps [0, T) for offset in [1, horizon]: an initial
/// interval [0, offset-2] when offset > 1, then consecutive intervals of
/// `horizon` steps starting at offset-1 (the last may be shorter).
std::vector<Interval> interval_partition(std::size_t steps, std::size_t horizon, std::size_t offset);

struct OffsetCandidate {
  std::size_t offset;
  std::vector<Interval> intervals;
  Schedule schedule;
  std::int64_t value;
};

struct GeneralPtasReport {
  PtasReport summary;  // best schedule and totals over all inner calls
  std::size_t horizon = 0;
  std::size_t best_offset = 0;
  std::vector<OffsetCandidate> candidates;
};

/// Arbitrary-horizon scheme: for each offset, solve every interval of the
/// offset's partition independently (bonuses across interval boundaries
/// are not seen by the inner solver) at accuracy epsilon/2, concatenate,
/// and keep the candidate with the best full-horizon value. When
/// T <= horizon the inner solver runs once on the whole horizon.
GeneralPtasReport ptas_general(const Instance& inst, const Rational& epsilon, const IntervalSolver& inner);

}  // namespace mkp
