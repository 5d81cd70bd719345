#include "mkp/core.hpp"

#include <string>

#include "mkp/error.hpp"

namespace mkp {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow while summing objective terms");
  return r;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw StructuralError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

namespace {

void expect_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw StructuralError(std::string(name) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

std::int64_t checked_sum(const IntMatrix& m, const char* name) {
  std::int64_t s = 0;
  for (auto v : m.data()) {
    if (v < 0) throw ArgumentError(std::string(name) + " must be non-negative");
    s = checked_add(s, v);
  }
  return s;
}

}  // namespace

Instance::Instance(std::size_t steps, std::size_t objects, IntMatrix profits, IntMatrix weights, IntMatrix bonuses,
                   std::vector<std::int64_t> capacities)
    : steps_(steps),
      objects_(objects),
      profits_(std::move(profits)),
      weights_(std::move(weights)),
      bonuses_(std::move(bonuses)),
      capacities_(std::move(capacities)) {
  if (steps_ == 0) throw ArgumentError("an instance needs at least one time step");
  expect_shape(profits_, steps_, objects_, "profits");
  expect_shape(weights_, steps_, objects_, "weights");
  expect_shape(bonuses_, steps_ - 1, objects_, "bonuses");
  if (capacities_.size() != steps_)
    throw StructuralError("capacities has " + std::to_string(capacities_.size()) + " entries, expected " +
                          std::to_string(steps_));
  for (auto c : capacities_)
    if (c < 0) throw ArgumentError("capacities must be non-negative");
  checked_sum(weights_, "weights");
  total_bonus_ = checked_sum(bonuses_, "bonuses");
  ceiling_ = checked_add(checked_sum(profits_, "profits"), total_bonus_);
}

Instance Instance::restrict_objects(std::span<const std::size_t> objects) const {
  const std::size_t k = objects.size();
  IntMatrix p(steps_, k), w(steps_, k), b(steps_ - 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t i = objects[j];
    if (i >= objects_) throw ArgumentError("object index " + std::to_string(i) + " out of range");
    for (std::size_t t = 0; t < steps_; ++t) {
      p(t, j) = profits_(t, i);
      w(t, j) = weights_(t, i);
      if (t + 1 < steps_) b(t, j) = bonuses_(t, i);
    }
  }
  return Instance(steps_, k, std::move(p), std::move(w), std::move(b), capacities_);
}

Instance Instance::restrict_steps(std::size_t first, std::size_t last) const {
  if (first > last || last >= steps_) throw ArgumentError("invalid step range");
  const std::size_t len = last - first + 1;
  IntMatrix p(len, objects_), w(len, objects_), b(len - 1, objects_);
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t i = 0; i < objects_; ++i) {
      p(t, i) = profits_(first + t, i);
      w(t, i) = weights_(first + t, i);
      if (t + 1 < len) b(t, i) = bonuses_(first + t, i);
    }
  std::vector<std::int64_t> cap(capacities_.begin() + static_cast<std::ptrdiff_t>(first),
                                capacities_.begin() + static_cast<std::ptrdiff_t>(last + 1));
  return Instance(len, objects_, std::move(p), std::move(w), std::move(b), std::move(cap));
}

Instance Instance::with_capacities(std::vector<std::int64_t> capacities) const {
  return Instance(steps_, objects_, profits_, weights_, bonuses_, std::move(capacities));
}

void check_shape(const Instance& inst, const Schedule& sched) {
  if (sched.steps() != inst.steps() || sched.objects() != inst.objects())
    throw StructuralError("schedule is " + std::to_string(sched.steps()) + "x" + std::to_string(sched.objects()) +
                          " but the instance has T=" + std::to_string(inst.steps()) +
                          ", n=" + std::to_string(inst.objects()));
}

std::int64_t step_load(const Instance& inst, const Schedule& sched, std::size_t t) {
  check_shape(inst, sched);
  std::int64_t load = 0;
  for (std::size_t i = 0; i < inst.objects(); ++i)
    if (sched.taken(t, i)) load += inst.weight(t, i);  // bounded by the validated weight sum
  return load;
}

bool is_feasible(const Instance& inst, const Schedule& sched) {
  check_shape(inst, sched);
  for (std::size_t t = 0; t < inst.steps(); ++t)
    if (step_load(inst, sched, t) > inst.capacity(t)) return false;
  return true;
}

ObjectiveBreakdown evaluate(const Instance& inst, const Schedule& sched) {
  check_shape(inst, sched);
  ObjectiveBreakdown out;
  out.per_object_reward.assign(inst.objects(), 0);
  // Every partial sum is bounded by value_ceiling(), which fits in int64.
  for (std::size_t i = 0; i < inst.objects(); ++i) {
    std::int64_t reward = 0;
    for (std::size_t t = 0; t < inst.steps(); ++t) {
      if (sched.taken(t, i)) {
        out.knapsack_profit += inst.profit(t, i);
        reward += inst.profit(t, i);
      }
      if (t + 1 < inst.steps() && sched.taken(t, i) == sched.taken(t + 1, i)) {
        out.transition_profit += inst.bonus(t, i);
        reward += inst.bonus(t, i);
      }
    }
    out.per_object_reward[i] = reward;
  }
  out.total = out.knapsack_profit + out.transition_profit;
  return out;
}

std::int64_t object_reward(const Instance& inst, const Schedule& sched, std::size_t i) {
  check_shape(inst, sched);
  if (i >= inst.objects()) throw ArgumentError("object index " + std::to_string(i) + " out of range");
  std::int64_t reward = 0;
  for (std::size_t t = 0; t < inst.steps(); ++t) {
    if (sched.taken(t, i)) reward += inst.profit(t, i);
    if (t + 1 < inst.steps() && sched.taken(t, i) == sched.taken(t + 1, i)) reward += inst.bonus(t, i);
  }
  return reward;
}

std::int64_t trajectory_reward(const Instance& inst, std::size_t i, std::span<const std::uint8_t> take) {
  if (take.size() != inst.steps()) throw StructuralError("trajectory length differs from T");
  if (i >= inst.objects()) throw ArgumentError("object index " + std::to_string(i) + " out of range");
  std::int64_t reward = 0;
  for (std::size_t t = 0; t < take.size(); ++t) {
    if (take[t]) reward += inst.profit(t, i);
    if (t + 1 < take.size() && (take[t] != 0) == (take[t + 1] != 0)) reward += inst.bonus(t, i);
  }
  return reward;
}

}  // namespace mkp
