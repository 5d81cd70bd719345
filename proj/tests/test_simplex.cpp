#include <sstream>

#include "doctest.h"
#include "mkp/error.hpp"
#include "mkp/exact.hpp"
#include "mkp/simplex.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mkp;

namespace {

std::size_t fractional_bound(std::size_t T) { return (T * T * T + 3 * T * T + 2 * T) / 6; }

void check_feasible_point(const Instance& inst, const FractionalSolution& sol) {
  for (std::size_t t = 0; t < inst.steps(); ++t) {
    Rational load = 0;
    for (std::size_t i = 0; i < inst.objects(); ++i) {
      CHECK(sol.x(t, i) >= 0);
      CHECK(sol.x(t, i) <= 1);
      load += from_int64(inst.weight(t, i)) * sol.x(t, i);
    }
    CHECK(load <= from_int64(inst.capacity(t)));
  }
  for (std::size_t t = 0; t + 1 < inst.steps(); ++t)
    for (std::size_t i = 0; i < inst.objects(); ++i) {
      CHECK(sol.z(t, i) >= 0);
      CHECK(sol.z(t, i) <= 1 - abs(sol.x(t + 1, i) - sol.x(t, i)));
    }
}

}  // namespace

TEST_CASE("build_lp sizes") {
  const auto one = make_instance(2, 1, {{1}, {1}}, {{1}, {1}}, {{1}}, {1, 1});
  const auto m1 = build_lp(one);
  CHECK(m1.num_vars == 3);
  CHECK(m1.constraints.size() == 4);

  const auto inst = oracle::random_instance(3, 2, 3);
  const auto m = build_lp(inst);
  CHECK(m.num_vars == 6 + 4);
  CHECK(m.constraints.size() == 3 + 8);
  CHECK(m.x_index(2, 1) == 5);
  CHECK(m.z_index(0, 0) == 6);
  CHECK(m.var_name(m.z_index(1, 1)) == "z_2_2");
  for (const auto& b : m.bounds) {
    CHECK(b.lower == 0);
    CHECK(b.upper == 1);
  }
}

TEST_CASE("build_lp fixing and capacity override") {
  const auto inst = oracle::random_instance(5, 2, 2);
  const StepObject fix[] = {{0, 0}};
  const auto m = build_lp(inst, fix, std::vector<std::int64_t>{7, 0});
  CHECK(m.bounds[m.x_index(0, 0)].upper == 0);
  CHECK(m.bounds[m.x_index(0, 1)].upper == 1);
  CHECK(m.constraints[0].rhs == 7);
  CHECK(m.constraints[1].rhs == 0);

  const StepObject bad[] = {{2, 0}};
  CHECK_THROWS_AS(build_lp(inst, bad), ArgumentError);
  CHECK_THROWS_AS(build_lp(inst, {}, std::vector<std::int64_t>{-1, 0}), ArgumentError);
  CHECK_THROWS_AS(build_lp(inst, {}, std::vector<std::int64_t>{1}), StructuralError);
}

TEST_CASE("weightless objects are all taken") {
  const auto inst = make_instance(2, 3, {{1, 1, 1}, {1, 1, 1}}, {{0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}}, {0, 0});
  const auto sol = solve_basic(build_lp(inst));
  CHECK(sol.is_basic);
  CHECK(sol.objective_value == 6);
  for (const auto& v : sol.x_values) CHECK(v == 1);
}

TEST_CASE("single fractional knapsack") {
  const auto inst = make_instance(1, 1, {{10}}, {{2}}, {}, {1});
  const auto model = build_lp(inst);
  const auto sol = normalize_z(model, solve_basic(model));
  CHECK(sol.x(0, 0) == Rational(1, 2));
  CHECK(sol.objective_value == 5);
  const auto frac = count_fractional_objects(sol);
  CHECK(frac.count == 1);
  CHECK(frac.objects == std::vector<std::size_t>{0});
  CHECK(fractional_reward(model, sol, 0) == 5);
}

TEST_CASE("solver optimum matches the textbook oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t T = 1 + seed % 3, n = 1 + seed % 5;
    const auto inst = oracle::random_instance(seed, n, T);
    const auto model = build_lp(inst);
    const auto sol = solve_basic(model);
    CHECK(sol.objective_value == oracle::textbook_lp_optimum(model));
    check_feasible_point(inst, sol);
  }
}

TEST_CASE("fixed variables stay at zero") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = oracle::random_instance(seed, 4, 2);
    std::vector<StepObject> fix{{0, seed % 4}, {1, (seed + 1) % 4}};
    const auto model = build_lp(inst, fix);
    const auto sol = solve_basic(model);
    for (const auto& f : fix) CHECK(sol.x(f.step, f.object) == 0);
    CHECK(sol.objective_value == oracle::textbook_lp_optimum(model));
  }
}

TEST_CASE("normalize_z") {
  const auto inst = make_instance(2, 2, {{0, 0}, {0, 0}}, {{1, 1}, {1, 1}}, {{4, 6}}, {2, 2});
  const auto model = build_lp(inst);
  FractionalSolution sol;
  sol.steps = 2;
  sol.objects = 2;
  sol.x_values = {Rational(1), Rational(1, 3), Rational(1), Rational(1)};
  sol.z_values = {Rational(0), Rational(1, 3)};
  sol.is_basic = true;
  const auto norm = normalize_z(model, sol);
  CHECK(norm.z(0, 0) == 1);
  CHECK(norm.z(0, 1) == Rational(1, 3));
  CHECK(norm.objective_value == 4 + 2);
  CHECK_FALSE(norm.is_basic);
  CHECK(norm.x_values == sol.x_values);
}

TEST_CASE("normalizing an optimal vertex never changes its objective") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = oracle::random_instance(seed, 6, 3);
    IntMatrix b = inst.bonuses();
    for (std::size_t i = 0; i < 6; i += 2) b(0, i) = 0;  // zero-bonus z variables are free
    inst = Instance(3, 6, inst.profits(), inst.weights(), b,
                    std::vector<std::int64_t>(inst.capacities().begin(), inst.capacities().end()));
    const auto model = build_lp(inst);
    const auto raw = solve_basic(model);
    const auto norm = normalize_z(model, raw);
    CHECK(norm.objective_value == raw.objective_value);
    for (std::size_t t = 0; t + 1 < 3; ++t)
      for (std::size_t i = 0; i < 6; ++i) CHECK(norm.z(t, i) == 1 - abs(norm.x(t + 1, i) - norm.x(t, i)));
  }
}

TEST_CASE("integral solutions have no fractional objects") {
  FractionalSolution sol;
  sol.steps = 2;
  sol.objects = 2;
  sol.x_values = {Rational(1), Rational(0), Rational(0), Rational(0)};
  sol.z_values = {Rational(0), Rational(1)};
  CHECK(count_fractional_objects(sol).count == 0);
}

TEST_CASE("fractional objects respect the horizon bound") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t T = 2 + seed % 3;
    const auto inst = oracle::random_instance(seed, 8 + seed % 7, T);
    const auto model = build_lp(inst);
    const auto sol = normalize_z(model, solve_basic(model));
    const auto frac = count_fractional_objects(sol);
    CHECK(frac.count <= fractional_bound(T));
    CHECK(frac.count <= T * T * T);
    if (T == 2) CHECK(frac.count <= 4);
  }
}

TEST_CASE("relaxation sandwich") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = oracle::random_instance(seed, 5, 3);
    const auto lp = solve_basic(build_lp(inst)).objective_value;
    const auto opt = dp_solve(inst).breakdown.total;
    CHECK(lp >= from_int64(opt));
    CHECK(opt >= inst.total_bonus());
  }
}

TEST_CASE("scaling profits and bonuses scales the optimum") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = oracle::random_instance(seed, 6, 2);
    IntMatrix p = inst.profits(), b = inst.bonuses();
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t i = 0; i < 6; ++i) {
        p(t, i) *= 3;
        if (t == 0) b(t, i) *= 3;
      }
    const Instance scaled(2, 6, p, inst.weights(), b,
                          std::vector<std::int64_t>(inst.capacities().begin(), inst.capacities().end()));
    const auto m1 = build_lp(inst), m3 = build_lp(scaled);
    const auto s1 = normalize_z(m1, solve_basic(m1)), s3 = normalize_z(m3, solve_basic(m3));
    CHECK(s3.objective_value == 3 * s1.objective_value);
    CHECK(count_fractional_objects(s3).objects == count_fractional_objects(s1).objects);
  }
}

TEST_CASE("a model whose all-zero point is infeasible is rejected") {
  LpModel m;
  m.num_vars = 1;
  m.objective = {Rational(1)};
  m.bounds = {{Rational(0), Rational(1)}};
  m.constraints = {LinearRow{"r", {{0, Rational(1)}}, Rational(-1)}};
  CHECK_THROWS_AS(solve_basic(m), ArgumentError);
}

TEST_CASE("LP text dump") {
  const auto inst = make_instance(2, 1, {{3}, {4}}, {{2}, {1}}, {{5}}, {1, 1});
  std::ostringstream out;
  write_lp_format(build_lp(inst), out);
  const auto text = out.str();
  CHECK(text.find("Maximize\n obj: 3 x_1_1 + 4 x_2_1 + 5 z_1_1\n") != std::string::npos);
  CHECK(text.find(" cap_1: 2 x_1_1 <= 1\n") != std::string::npos);
  CHECK(text.find(" stay_up_1_1: z_1_1 - x_1_1 + x_2_1 <= 1\n") != std::string::npos);
  CHECK(text.find(" 0 <= z_1_1 <= 1\n") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);
}
