#include "mkp/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "mkp/error.hpp"
#include "mkp/exact.hpp"

namespace mkp {

RoundResult round_lp(const Instance& inst, std::span<const StepObject> fixed_zero,
                     const std::optional<std::vector<std::int64_t>>& capacities) {
  const LpModel model = build_lp(inst, fixed_zero, capacities);
  RoundResult out;
  out.lp = normalize_z(model, solve_basic(model));
  out.lp_value = out.lp.objective_value;
  out.schedule = Schedule(inst.steps(), inst.objects());
  for (std::size_t t = 0; t < inst.steps(); ++t)
    for (std::size_t i = 0; i < inst.objects(); ++i) out.schedule.set(t, i, out.lp.x(t, i) == 1);
  out.value = evaluate(inst, out.schedule).total;
  out.fractional = count_fractional_objects(out.lp);
  for (auto i : out.fractional.objects) out.fractional_reward_sum += fractional_reward(model, out.lp, i);
  if (from_int64(out.value) < out.lp_value - out.fractional_reward_sum)
    throw Error("internal: LP rounding lost more than the fractional objects' rewards");
  return out;
}

std::size_t ptas_ell(std::size_t steps, std::size_t objects, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw ArgumentError("epsilon must be positive");
  const mpz_class t(static_cast<unsigned long>(steps));
  const Rational bound = Rational((t + 1) * t * t * t) / epsilon;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (c >= mpz_class(static_cast<unsigned long>(objects))) return objects;
  return static_cast<std::size_t>(c.get_ui());
}

double ptas_work_estimate(std::size_t steps, std::size_t objects, std::size_t ell) {
  // log-space to avoid overflow on large inputs
  const double log_binom = std::lgamma(static_cast<double>(objects) + 1) - std::lgamma(static_cast<double>(ell) + 1) -
                           std::lgamma(static_cast<double>(objects - ell) + 1);
  const double log_work = log_binom + static_cast<double>(ell * steps) * std::log(2.0);
  return std::round(std::exp(log_work));
}

namespace {

// Next ell-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (comb[pos] < n - k + pos) {
      ++comb[pos];
      for (std::size_t q = pos + 1; q < k; ++q) comb[q] = comb[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PtasReport ptas_constant(const Instance& inst, const PtasOptions& options) {
  const std::size_t T = inst.steps(), n = inst.objects();
  if (sgn(options.epsilon) <= 0) throw ArgumentError("epsilon must be positive");
  const std::size_t ell = std::min(options.ell ? *options.ell : ptas_ell(T, n, options.epsilon), n);
  if (ell > 32) throw GuardRefusal("guessed sets larger than 32 objects are not supported", static_cast<double>(ell), 32);
  const double work = ptas_work_estimate(T, n, ell);
  if (work > options.work_limit)
    throw GuardRefusal("approximation scheme guess loop too large (ell=" + std::to_string(ell) + ")", work,
                       options.work_limit);

  PtasReport report;
  report.epsilon = options.epsilon;
  report.ell = ell;
  report.value = -1;

  std::vector<std::size_t> X(ell);
  for (std::size_t k = 0; k < ell; ++k) X[k] = k;
  std::vector<std::size_t> Y;
  std::vector<std::vector<std::uint32_t>> feasible(T);
  std::vector<std::vector<std::int64_t>> load(T);
  std::vector<std::size_t> pick(T);
  std::vector<std::uint8_t> trajectory(T);
  std::vector<StepObject> fixed;
  std::vector<std::int64_t> residual(T);
  std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, Schedule> memo;

  do {
    ++report.guessed_sets;
    Y.clear();
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (k < ell && X[k] == i)
        ++k;
      else
        Y.push_back(i);
    }
    const Instance rest_instance = inst.restrict_objects(Y);
    memo.clear();

    // Bit k of a mask selects X[k].
    for (std::size_t t = 0; t < T; ++t) {
      feasible[t].clear();
      load[t].clear();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ell); ++mask) {
        std::int64_t w = 0;
        for (std::size_t k = 0; k < ell; ++k)
          if ((mask >> k) & 1U) w += inst.weight(t, X[k]);
        if (w <= inst.capacity(t)) {
          feasible[t].push_back(static_cast<std::uint32_t>(mask));
          load[t].push_back(w);
        }
      }
    }

    std::fill(pick.begin(), pick.end(), 0);
    for (bool done = false; !done;) {
      ++report.assignments_examined;

      std::int64_t g = std::numeric_limits<std::int64_t>::max();
      for (std::size_t k = 0; k < ell; ++k) {
        for (std::size_t t = 0; t < T; ++t) trajectory[t] = (feasible[t][pick[t]] >> k) & 1U;
        g = std::min(g, trajectory_reward(inst, X[k], trajectory));
      }
      for (std::size_t t = 0; t < T; ++t) residual[t] = inst.capacity(t) - load[t][pick[t]];

      auto key = std::make_pair(g, residual);
      auto it = memo.find(key);
      if (it == memo.end()) {
        Schedule rest(T, Y.size());
        if (!Y.empty()) {
          fixed.clear();
          for (std::size_t t = 0; t < T; ++t)
            for (std::size_t j = 0; j < Y.size(); ++j)
              if (inst.profit(t, Y[j]) > g) fixed.push_back({t, j});
          rest = round_lp(rest_instance, fixed, residual).schedule;
          ++report.lp_solves;
        }
        it = memo.emplace(std::move(key), std::move(rest)).first;
      }

      Schedule merged(T, n);
      for (std::size_t t = 0; t < T; ++t) {
        for (std::size_t k = 0; k < ell; ++k)
          if ((feasible[t][pick[t]] >> k) & 1U) merged.set(t, X[k], true);
        for (std::size_t j = 0; j < Y.size(); ++j)
          if (it->second.taken(t, j)) merged.set(t, Y[j], true);
      }
      const auto value = evaluate(inst, merged).total;
      if (value > report.value) {
        report.value = value;
        report.best_schedule = std::move(merged);
      }

      done = true;
      for (std::size_t t = T; t-- > 0;) {
        if (++pick[t] < feasible[t].size()) {
          done = false;
          break;
        }
        pick[t] = 0;
      }
    }
  } while (next_combination(X, n));

  report.breakdown = evaluate(inst, report.best_schedule);
  if (!is_feasible(inst, report.best_schedule)) throw Error("internal: approximation scheme built an infeasible schedule");
  return report;
}

IntervalSolver ptas_interval_solver(PtasOptions base) {
  return [base](const Instance& sub, const Rational& epsilon) {
    PtasOptions opt = base;
    opt.epsilon = epsilon;
    return ptas_constant(sub, opt);
  };
}

IntervalSolver dp_interval_solver(double max_table_entries) {
  return [max_table_entries](const Instance& sub, const Rational& epsilon) {
    auto exact = dp_solve(sub, max_table_entries);
    PtasReport r;
    r.best_schedule = std::move(exact.schedule);
    r.breakdown = std::move(exact.breakdown);
    r.value = r.breakdown.total;
    r.epsilon = epsilon;
    return r;
  };
}

std::size_t ptas_horizon(const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw ArgumentError("epsilon must be positive");
  const Rational half = epsilon / 2;
  return static_cast<std::size_t>(ceil_to_int64(1 / half));
}

std::vector<Interval> interval_partition(std::size_t steps, std::size_t horizon, std::size_t offset) {
  if (horizon == 0 || offset == 0 || offset > horizon) throw ArgumentError("offset must lie in [1, horizon]");
  std::vector<Interval> out;
  std::size_t start = std::min(offset - 1, steps);
  if (start > 0) out.push_back({0, start - 1});
  for (; start < steps; start += horizon) out.push_back({start, std::min(start + horizon, steps) - 1});
  return out;
}

GeneralPtasReport ptas_general(const Instance& inst, const Rational& epsilon, const IntervalSolver& inner) {
  const std::size_t T = inst.steps(), n = inst.objects();
  const std::size_t horizon = ptas_horizon(epsilon);
  const Rational inner_eps = epsilon / 2;

  GeneralPtasReport out;
  out.horizon = horizon;
  out.summary.epsilon = epsilon;
  out.summary.value = -1;
  const std::size_t offsets = T <= horizon ? 1 : horizon;

  for (std::size_t offset = 1; offset <= offsets; ++offset) {
    OffsetCandidate cand{offset, interval_partition(T, horizon, offset), Schedule(T, n), 0};
    for (const auto& iv : cand.intervals) {
      const PtasReport part = inner(inst.restrict_steps(iv.first, iv.last), inner_eps);
      out.summary.ell = std::max(out.summary.ell, part.ell);
      out.summary.guessed_sets += part.guessed_sets;
      out.summary.assignments_examined += part.assignments_examined;
      out.summary.lp_solves += part.lp_solves;
      for (std::size_t t = iv.first; t <= iv.last; ++t)
        for (std::size_t i = 0; i < n; ++i) cand.schedule.set(t, i, part.best_schedule.taken(t - iv.first, i));
    }
    cand.value = evaluate(inst, cand.schedule).total;
    if (cand.value > out.summary.value) {
      out.summary.value = cand.value;
      out.summary.best_schedule = cand.schedule;
      out.best_offset = offset;
    }
    out.candidates.push_back(std::move(cand));
  }
  out.summary.breakdown = evaluate(inst, out.summary.best_schedule);
  if (!is_feasible(inst, out.summary.best_schedule)) throw Error("internal: concatenated schedule is infeasible");
  return out;
}

}  // namespace mkp
