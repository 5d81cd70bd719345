#pragma once

#include <cstddef>
#include <cstdint>

#include "mkp/core.hpp"

namespace mkp {

struct ExactResult {
  Schedule schedule;
  ObjectiveBreakdown breakdown;
  std::uint64_t schedules_examined = 0;  // brute force only
  std::uint64_t table_entries = 0;       // dp only: prod(C_t + 1) * (n + 1)
};

inline constexpr std::size_t kDefaultBruteForceCells = 20;
inline constexpr double kDefaultDpTableEntries = 1e8;
/// Object choices are stored as 16-bit step masks.
inline constexpr std::size_t kDpMaxSteps = 16;

/// Enumerates every schedule and returns a maximizer; among maximizers the
/// lexicographically smallest 0/1 matrix (row-major, steps outermost) wins.
/// Refuses (GuardRefusal) when n*T exceeds `max_cells`.
ExactResult brute_force(const Instance& inst, std::size_t max_cells = kDefaultBruteForceCells);

/// Number of DP table entries, prod(C_t + 1) * (n + 1), as a double so that
/// huge instances report an estimate instead of overflowing.
double dp_table_entries(const Instance& inst);

/// Pseudo-polynomial dynamic program over residual-capacity vectors.
///
/// best(c, s) is the best value using objects [0, s) under capacities c.
/// Object s is placed at a step set A (valid when w(t,s) <= c_t for t in A),
/// earning its profits on A plus its bonuses where membership in A does
/// not change, and consuming w(t,s) of c_t only for t in A. Ties keep the
/// lexicographically smallest A (as the 0/1 vector over steps).
///
/// Refuses when the table exceeds `max_table_entries` or T > kDpMaxSteps.
ExactResult dp_solve(const Instance& inst, double max_table_entries = kDefaultDpTableEntries);

}  // namespace mkp
