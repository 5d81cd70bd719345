#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mkp {

/// Row-major dense matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Builds from nested rows; throws StructuralError when rows are ragged
  /// or `cols` disagrees.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::int64_t> data() const noexcept { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Multistage knapsack instance: T steps, n objects, profits p(t,i),
/// weights w(t,i), stability bonuses b(t,i) between steps t and t+1, and
/// per-step capacities. All indices are 0-based.
///
/// Construction validates shapes and non-negativity, and checks that the
/// largest attainable objective (sum of all profits and bonuses) fits in
/// int64, so every evaluation downstream is overflow-free.
class Instance {
 public:
  Instance(std::size_t steps, std::size_t objects, IntMatrix profits, IntMatrix weights, IntMatrix bonuses,
           std::vector<std::int64_t> capacities);

  std::size_t steps() const noexcept { return steps_; }
  std::size_t objects() const noexcept { return objects_; }

  std::int64_t profit(std::size_t t, std::size_t i) const noexcept { return profits_(t, i); }
  std::int64_t weight(std::size_t t, std::size_t i) const noexcept { return weights_(t, i); }
  /// Bonus for keeping object i's decision between steps t and t+1 (t < T-1).
  std::int64_t bonus(std::size_t t, std::size_t i) const noexcept { return bonuses_(t, i); }
  std::int64_t capacity(std::size_t t) const noexcept { return capacities_[t]; }

  const IntMatrix& profits() const noexcept { return profits_; }
  const IntMatrix& weights() const noexcept { return weights_; }
  const IntMatrix& bonuses() const noexcept { return bonuses_; }
  std::span<const std::int64_t> capacities() const noexcept { return capacities_; }

  /// Sum of all profits and bonuses: an upper bound on any objective value.
  std::int64_t value_ceiling() const noexcept { return ceiling_; }
  /// Sum of all bonuses: the value of the empty schedule.
  std::int64_t total_bonus() const noexcept { return total_bonus_; }

  /// Sub-instance on the given objects (in the given order).
  Instance restrict_objects(std::span<const std::size_t> objects) const;
  /// Sub-instance on steps [first, last]; bonuses crossing the cut are dropped.
  Instance restrict_steps(std::size_t first, std::size_t last) const;
  /// Same data with capacities replaced.
  Instance with_capacities(std::vector<std::int64_t> capacities) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t steps_;
  std::size_t objects_;
  IntMatrix profits_;
  IntMatrix weights_;
  IntMatrix bonuses_;
  std::vector<std::int64_t> capacities_;
  std::int64_t ceiling_ = 0;
  std::int64_t total_bonus_ = 0;
};

/// Integral solution: taken(t, i) iff object i is in the knapsack at step t.
class Schedule {
 public:
  Schedule() = default;
  Schedule(std::size_t steps, std::size_t objects) : steps_(steps), objects_(objects), x_(steps * objects, 0) {}

  std::size_t steps() const noexcept { return steps_; }
  std::size_t objects() const noexcept { return objects_; }
  bool taken(std::size_t t, std::size_t i) const noexcept { return x_[t * objects_ + i] != 0; }
  void set(std::size_t t, std::size_t i, bool v) noexcept { x_[t * objects_ + i] = v ? 1 : 0; }

  /// Lexicographic order on the row-major 0/1 matrix (false < true).
  friend auto operator<=>(const Schedule&, const Schedule&) = default;

 private:
  std::size_t steps_ = 0;
  std::size_t objects_ = 0;
  std::vector<std::uint8_t> x_;
};

struct ObjectiveBreakdown {
  std::int64_t knapsack_profit = 0;
  std::int64_t transition_profit = 0;
  std::int64_t total = 0;
  std::vector<std::int64_t> per_object_reward;

  friend bool operator==(const ObjectiveBreakdown&, const ObjectiveBreakdown&) = default;
};

/// Throws StructuralError unless the schedule has the instance's shape.
void check_shape(const Instance& inst, const Schedule& sched);

/// Total weight of the objects taken at step t.
std::int64_t step_load(const Instance& inst, const Schedule& sched, std::size_t t);

/// True iff every step's load is within its capacity.
bool is_feasible(const Instance& inst, const Schedule& sched);

/// Knapsack and transition profit of `sched`; feasibility is not checked.
ObjectiveBreakdown evaluate(const Instance& inst, const Schedule& sched);

/// Reward g_i(S) of one object: its profits at the steps where it is taken
/// plus the bonuses of the transitions where its decision does not change.
std::int64_t object_reward(const Instance& inst, const Schedule& sched, std::size_t i);

/// Reward of object i when its whole trajectory is `take` (one flag per step).
std::int64_t trajectory_reward(const Instance& inst, std::size_t i, std::span<const std::uint8_t> take);

/// Overflow-checked addition; throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace mkp
