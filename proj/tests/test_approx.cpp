#include "doctest.h"
#include "mkp/approx.hpp"
#include "mkp/error.hpp"
#include "mkp/exact.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mkp;

namespace {

// value >= (1 - eps) * opt, exactly
bool within(std::int64_t value, std::int64_t opt, const Rational& eps) {
  return from_int64(value) >= (1 - eps) * from_int64(opt);
}

std::vector<std::size_t> one_based(const std::vector<Interval>& ivs, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t t = ivs[k].first; t <= ivs[k].last; ++t) out.push_back(t + 1);
  return out;
}

}  // namespace

TEST_CASE("round_lp on an integral optimum loses nothing") {
  const auto inst = make_instance(2, 2, {{2, 3}, {1, 1}}, {{0, 0}, {0, 0}}, {{1, 1}}, {0, 0});
  const auto r = round_lp(inst);
  CHECK(r.fractional.count == 0);
  CHECK(from_int64(r.value) == r.lp_value);
  CHECK(r.value == 2 + 3 + 1 + 1 + 2);
}

TEST_CASE("round_lp on a single fractional item") {
  const auto inst = make_instance(1, 1, {{10}}, {{2}}, {}, {1});
  const auto r = round_lp(inst);
  CHECK(r.value == 0);
  CHECK(r.schedule == Schedule(1, 1));
  CHECK(r.lp_value == 5);
  CHECK(r.fractional_reward_sum == 5);
  CHECK(r.lp_value - from_int64(r.value) == r.fractional_reward_sum);
}

TEST_CASE("rounding loss is bounded by the fractional objects' rewards") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t T = 2 + seed % 3;
    const auto inst = oracle::random_instance(seed, 10, T);
    const auto r = round_lp(inst);
    CHECK(is_feasible(inst, r.schedule));
    // recompute both sides from the returned fractional solution
    Rational lp = 0, loss = 0;
    for (std::size_t i = 0; i < inst.objects(); ++i) {
      Rational g = 0;
      bool fractional = false;
      for (std::size_t t = 0; t < T; ++t) {
        g += from_int64(inst.profit(t, i)) * r.lp.x(t, i);
        fractional = fractional || r.lp.x(t, i).get_den() != 1;
        if (t + 1 < T) {
          g += from_int64(inst.bonus(t, i)) * r.lp.z(t, i);
          fractional = fractional || r.lp.z(t, i).get_den() != 1;
        }
      }
      lp += g;
      if (fractional) loss += g;
    }
    CHECK(lp == r.lp_value);
    CHECK(loss == r.fractional_reward_sum);
    CHECK(from_int64(r.value) >= lp - loss);
  }
}

TEST_CASE("round_lp honours fixed variables and capacity overrides") {
  const auto inst = make_instance(2, 2, {{5, 5}, {5, 5}}, {{1, 1}, {1, 1}}, {{0, 0}}, {2, 2});
  const StepObject fix[] = {{0, 0}, {1, 0}};
  const auto r = round_lp(inst, fix, std::vector<std::int64_t>{1, 0});
  CHECK_FALSE(r.schedule.taken(0, 0));
  CHECK(r.schedule.taken(0, 1));
  CHECK_FALSE(r.schedule.taken(1, 1));
}

TEST_CASE("guessed-set size formula") {
  CHECK(ptas_ell(2, 100, Rational(1, 2)) == 48);
  CHECK(ptas_ell(2, 10, Rational(1, 2)) == 10);
  CHECK(ptas_ell(1, 1000, Rational(3, 10)) == 7);  // ceil(2 / 0.3)
  CHECK_THROWS_AS(ptas_ell(2, 10, Rational(0)), ArgumentError);
  std::size_t prev = 0;
  for (int k = 20; k >= 1; --k) {
    const auto ell = ptas_ell(3, 100000, Rational(k, 10));
    CHECK(ell >= prev);
    prev = ell;
  }
}

TEST_CASE("work estimate") {
  CHECK(ptas_work_estimate(2, 5, 2) == doctest::Approx(10.0 * 16));
  CHECK(ptas_work_estimate(3, 4, 4) == doctest::Approx(4096.0));
}

TEST_CASE("with every object guessed the scheme is exact") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t T = 2 + seed % 2;
    const auto inst = oracle::random_instance(seed, 12 / T, T);
    PtasOptions opt;
    opt.epsilon = Rational(1, 2);
    const auto r = ptas_constant(inst, opt);
    CHECK(r.ell == inst.objects());
    CHECK(r.lp_solves == 0);
    CHECK(r.value == dp_solve(inst).breakdown.total);
  }
}

TEST_CASE("guessing path keeps the guarantee on small instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto inst = oracle::random_instance(seed, 7, 2);
    for (std::size_t ell : {0, 1, 2}) {
      PtasOptions opt;
      opt.epsilon = Rational(1, 2);
      opt.ell = ell;
      const auto r = ptas_constant(inst, opt);
      CHECK(r.ell == ell);
      CHECK(is_feasible(inst, r.best_schedule));
      CHECK(r.value == evaluate(inst, r.best_schedule).total);
      CHECK(within(r.value, dp_solve(inst).breakdown.total, opt.epsilon));
      if (ell > 0) CHECK(r.lp_solves > 0);
    }
  }
}

TEST_CASE("scheme input checks") {
  const auto inst = oracle::random_instance(1, 20, 3);
  PtasOptions opt;
  opt.epsilon = Rational(0);
  CHECK_THROWS_AS(ptas_constant(inst, opt), ArgumentError);
  opt.epsilon = Rational(1, 2);
  CHECK_THROWS_AS(ptas_constant(inst, opt), GuardRefusal);
  opt.ell = 1;
  const auto a = ptas_constant(inst, opt), b = ptas_constant(inst, opt);
  CHECK(a.best_schedule == b.best_schedule);
  CHECK(a.assignments_examined == b.assignments_examined);
}

TEST_CASE("horizon and partitions") {
  CHECK(ptas_horizon(Rational(7, 10)) == 3);
  CHECK(ptas_horizon(Rational(1, 2)) == 4);
  CHECK(ptas_horizon(Rational(2)) == 1);

  const auto p1 = interval_partition(10, 3, 1);
  REQUIRE(p1.size() == 4);
  CHECK(one_based(p1, 0) == std::vector<std::size_t>{1, 2, 3});
  CHECK(one_based(p1, 3) == std::vector<std::size_t>{10});
  const auto p2 = interval_partition(10, 3, 2);
  REQUIRE(p2.size() == 4);
  CHECK(one_based(p2, 0) == std::vector<std::size_t>{1});
  CHECK(one_based(p2, 1) == std::vector<std::size_t>{2, 3, 4});
  CHECK(one_based(p2, 3) == std::vector<std::size_t>{8, 9, 10});
  CHECK_THROWS_AS(interval_partition(10, 3, 4), ArgumentError);
}

TEST_CASE("partitions tile the horizon and each boundary is cut once") {
  for (std::size_t T = 1; T <= 14; ++T)
    for (std::size_t h = 1; h <= 5; ++h) {
      std::vector<int> cuts(T, 0);
      for (std::size_t off = 1; off <= h; ++off) {
        const auto ivs = interval_partition(T, h, off);
        std::size_t next = 0;
        for (const auto& iv : ivs) {
          CHECK(iv.first == next);
          CHECK(iv.last >= iv.first);
          CHECK(iv.last - iv.first + 1 <= h);
          next = iv.last + 1;
          if (iv.last + 1 < T) ++cuts[iv.last];
        }
        CHECK(next == T);
      }
      if (h > 1 || T == 1)
        for (std::size_t j = 0; j + 1 < T; ++j) CHECK(cuts[j] == 1);
    }
}

TEST_CASE("short horizons run the inner solver once") {
  const auto inst = oracle::random_instance(4, 5, 3);
  const Rational eps(1, 2);  // horizon 4 >= T
  const auto inner = dp_interval_solver(kDefaultDpTableEntries);
  const auto r = ptas_general(inst, eps, inner);
  CHECK(r.candidates.size() == 1);
  CHECK(r.summary.best_schedule == inner(inst, eps / 2).best_schedule);
}

TEST_CASE("general scheme meets the guarantee") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomParams rp;
    rp.seed = seed;
    rp.objects = 3;
    rp.steps = 10;
    rp.weight_max = 2;
    rp.capacity = FixedCapacity{2};
    const auto inst = gen_random(rp);
    const auto opt = dp_solve(inst).breakdown.total;
    const Rational eps(7, 10);
    const auto with_dp = ptas_general(inst, eps, dp_interval_solver(kDefaultDpTableEntries));
    CHECK(with_dp.horizon == 3);
    CHECK(with_dp.candidates.size() == 3);
    CHECK(within(with_dp.summary.value, opt, eps));
    const auto with_ptas = ptas_general(inst, eps, ptas_interval_solver());
    CHECK(within(with_ptas.summary.value, opt, eps));
    CHECK(is_feasible(inst, with_ptas.summary.best_schedule));
    for (const auto& c : with_ptas.candidates) CHECK(c.value <= with_ptas.summary.value);
  }
}
