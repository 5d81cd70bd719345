#include "mkp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mkp/error.hpp"
#include "mkp/kernels.hpp"

namespace mkp {

namespace {

// Object i occupies bit (n - 1 - i), so ascending masks are ascending in
// lexicographic order of the 0/1 row.
struct StepChoices {
  std::vector<std::uint32_t> masks;
  std::vector<std::int64_t> profit;
};

struct BruteSearch {
  const Instance& inst;
  std::vector<StepChoices> steps;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;
  std::int64_t best_value = -1;
  std::uint64_t examined = 0;

  bool bit(std::uint32_t mask, std::size_t i) const { return (mask >> (inst.objects() - 1 - i)) & 1U; }

  std::int64_t bonus_between(std::size_t t, std::uint32_t a, std::uint32_t b) const {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < inst.objects(); ++i)
      if (bit(a, i) == bit(b, i)) v += inst.bonus(t, i);
    return v;
  }

  void search(std::size_t t, std::int64_t value) {
    if (t == inst.steps()) {
      ++examined;
      if (value > best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    const auto& choices = steps[t];
    for (std::size_t k = 0; k < choices.masks.size(); ++k) {
      current[t] = choices.masks[k];
      std::int64_t v = value + choices.profit[k];
      if (t > 0) v += bonus_between(t - 1, current[t - 1], current[t]);
      search(t + 1, v);
    }
  }
};

}  // namespace

ExactResult brute_force(const Instance& inst, std::size_t max_cells) {
  const std::size_t n = inst.objects(), T = inst.steps();
  if (n * T > max_cells)
    throw GuardRefusal("brute force needs 2^(n*T) schedules with n*T=" + std::to_string(n * T),
                       std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(n * T, 1000))),
                       std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(max_cells, 1000))));
  if (n > 31) throw GuardRefusal("brute force supports at most 31 objects", static_cast<double>(n), 31);

  BruteSearch bs{inst, std::vector<StepChoices>(T), std::vector<std::uint32_t>(T, 0), {}, -1, 0};
  for (std::size_t t = 0; t < T; ++t) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::int64_t load = 0, profit = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (bs.bit(mask, i)) {
          load += inst.weight(t, i);
          profit += inst.profit(t, i);
        }
      if (load <= inst.capacity(t)) {
        bs.steps[t].masks.push_back(mask);
        bs.steps[t].profit.push_back(profit);
      }
    }
  }
  bs.search(0, 0);

  ExactResult out;
  out.schedule = Schedule(T, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) out.schedule.set(t, i, bs.bit(bs.best[t], i));
  out.breakdown = evaluate(inst, out.schedule);
  out.schedules_examined = bs.examined;
  return out;
}

double dp_table_entries(const Instance& inst) {
  double cells = 1.0;
  for (auto c : inst.capacities()) cells *= static_cast<double>(c) + 1.0;
  return cells * (static_cast<double>(inst.objects()) + 1.0);
}

ExactResult dp_solve(const Instance& inst, double max_table_entries) {
  const std::size_t n = inst.objects(), T = inst.steps();
  if (T > kDpMaxSteps)
    throw GuardRefusal("dynamic program supports at most 16 steps", static_cast<double>(T), kDpMaxSteps);
  const double estimate = dp_table_entries(inst);
  if (estimate > max_table_entries) throw GuardRefusal("dynamic program table too large", estimate, max_table_entries);

  // Mixed-radix layout, last step innermost (stride 1).
  std::vector<std::size_t> stride(T);
  stride[T - 1] = 1;
  for (std::size_t t = T - 1; t > 0; --t) stride[t - 1] = stride[t] * static_cast<std::size_t>(inst.capacity(t) + 1);
  const std::size_t cells = stride[0] * static_cast<std::size_t>(inst.capacity(0) + 1);
  const std::size_t last = T - 1;
  const std::int64_t cap_last = inst.capacity(last);

  std::vector<std::int64_t> prev(cells, 0), cur(cells, 0);
  std::vector<std::uint16_t> choices(cells * n, 0);
  const auto& k = kernels::active();
  const std::uint32_t codes = 1U << T;

  // Step t is bit (T - 1 - t) of a code: ascending codes are ascending
  // lexicographic step vectors.
  auto in_code = [T](std::uint32_t code, std::size_t t) { return ((code >> (T - 1 - t)) & 1U) != 0; };

  std::vector<std::int64_t> usage(T);
  std::vector<std::int64_t> outer(T);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint16_t* ch = choices.data() + s * cells;
    for (std::uint32_t code = 0; code < codes; ++code) {
      std::int64_t reward = 0;
      bool valid = true;
      std::size_t offset = 0;
      for (std::size_t t = 0; t < T; ++t) {
        const bool take = in_code(code, t);
        usage[t] = take ? inst.weight(t, s) : 0;
        if (usage[t] > inst.capacity(t)) valid = false;
        offset += static_cast<std::size_t>(usage[t]) * stride[t];
        if (take) reward += inst.profit(t, s);
        if (t + 1 < T && take == in_code(code, t + 1)) reward += inst.bonus(t, s);
      }
      if (code == 0) {
        k.shift_add(cur.data(), ch, prev.data(), cells, reward, 0);
        continue;
      }
      if (!valid) continue;

      // Odometer over the outer coordinates, each from usage[t] to C_t.
      for (std::size_t t = 0; t < last; ++t) outer[t] = usage[t];
      const std::size_t run = static_cast<std::size_t>(cap_last - usage[last] + 1);
      for (bool done = false; !done;) {
        std::size_t base = static_cast<std::size_t>(usage[last]);
        for (std::size_t t = 0; t < last; ++t) base += static_cast<std::size_t>(outer[t]) * stride[t];
        k.maxplus(cur.data() + base, ch + base, prev.data() + base - offset, run, reward,
                  static_cast<std::uint16_t>(code));
        done = true;
        for (std::size_t t = last; t-- > 0;) {
          if (++outer[t] <= inst.capacity(t)) {
            done = false;
            break;
          }
          outer[t] = usage[t];
        }
      }
    }
    std::swap(prev, cur);
  }

  ExactResult out;
  out.schedule = Schedule(T, n);
  std::vector<std::int64_t> c(inst.capacities().begin(), inst.capacities().end());
  for (std::size_t s = n; s-- > 0;) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < T; ++t) idx += static_cast<std::size_t>(c[t]) * stride[t];
    const std::uint32_t code = choices[s * cells + idx];
    for (std::size_t t = 0; t < T; ++t)
      if (in_code(code, t)) {
        out.schedule.set(t, s, true);
        c[t] -= inst.weight(t, s);
      }
  }
  out.breakdown = evaluate(inst, out.schedule);
  out.table_entries = static_cast<std::uint64_t>(estimate);
  if (out.breakdown.total != prev[cells - 1])
    throw Error("internal: dynamic program reconstruction disagrees with its table");
  return out;
}

}  // namespace mkp
