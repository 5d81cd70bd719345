#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mkp/core.hpp"
#include "mkp/rational.hpp"

namespace mkp {

/// Sparse row `sum(coeff * var) <= rhs`. Every row of an LpModel is a
/// less-or-equal constraint.
struct LinearRow {
  std::string name;
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational rhs;
};

struct VarBounds {
  Rational lower;
  Rational upper;
};

/// Maximization LP over boxed variables.
///
/// Variable order for a relaxation built by build_lp(): the T*n selection
/// variables x(t,i) at index t*n + i, then the (T-1)*n stability variables
/// z(t,i) at index T*n + t*n + i. Rows: T capacity rows, then for every
/// (t,i) with t < T-1 the pair
///   z(t,i) - x(t,i) + x(t+1,i) <= 1
///   z(t,i) + x(t,i) - x(t+1,i) <= 1
/// which together force z(t,i) <= 1 - |x(t+1,i) - x(t,i)|.
struct LpModel {
  std::size_t steps = 0;
  std::size_t objects = 0;
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearRow> constraints;
  std::vector<VarBounds> bounds;

  std::size_t x_index(std::size_t t, std::size_t i) const noexcept { return t * objects + i; }
  std::size_t z_index(std::size_t t, std::size_t i) const noexcept { return steps * objects + t * objects + i; }
  std::string var_name(std::size_t k) const;
};

struct StepObject {
  std::size_t step;
  std::size_t object;
};

/// LP relaxation of the multistage knapsack with x, z in [0, 1]. Variables
/// listed in `fixed_zero` get bounds [0, 0]; `capacities`, when given,
/// replace the instance's capacities.
LpModel build_lp(const Instance& inst, std::span<const StepObject> fixed_zero = {},
                 const std::optional<std::vector<std::int64_t>>& capacities = std::nullopt);

struct LpStats {
  std::size_t pivots = 0;
  std::size_t bound_flips = 0;
};

/// LP solution split into the selection (x) and stability (z) blocks.
struct FractionalSolution {
  std::size_t steps = 0;
  std::size_t objects = 0;
  std::vector<Rational> x_values;  // T*n
  std::vector<Rational> z_values;  // (T-1)*n
  Rational objective_value;
  bool is_basic = false;
  LpStats stats;

  const Rational& x(std::size_t t, std::size_t i) const { return x_values[t * objects + i]; }
  const Rational& z(std::size_t t, std::size_t i) const { return z_values[t * objects + i]; }
};

/// Primal simplex in exact arithmetic with implicit variable bounds.
/// Starts from the all-slack basis with every variable at its lower bound
/// and pivots by Bland's rule (smallest eligible index enters; ties in the
/// ratio test leave by smallest index, the entering variable's own bound
/// flip included). Returns an optimal vertex.
///
/// Requires the all-lower-bound point to be feasible, which holds for every
/// build_lp() model. Throws UnboundedError if the objective is unbounded.
FractionalSolution solve_basic(const LpModel& model);

/// Rewrites z(t,i) = 1 - |x(t+1,i) - x(t,i)| and recomputes the objective.
/// The result keeps is_basic only if no z value changed.
FractionalSolution normalize_z(const LpModel& model, const FractionalSolution& sol);

struct FractionalObjects {
  std::size_t count = 0;
  std::vector<std::size_t> objects;  // ascending
};

/// Objects with at least one non-integral x or z value (exact test).
FractionalObjects count_fractional_objects(const FractionalSolution& sol);

/// Fractional reward of object i: sum_t p(t,i) x(t,i) + sum_t b(t,i) z(t,i).
Rational fractional_reward(const LpModel& model, const FractionalSolution& sol, std::size_t i);

/// Writes the model in CPLEX LP text format (for cross-checking with
/// external solvers; names are 1-based).
void write_lp_format(const LpModel& model, std::ostream& out);

}  // namespace mkp
