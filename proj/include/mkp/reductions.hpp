#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "mkp/core.hpp"
#include "mkp/rational.hpp"

namespace mkp {

/// Simple undirected graph; vertices are 0-based, every edge is stored
/// with first < second.
struct Graph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Validates and orients the edges (i < j). Throws ArgumentError on
/// self-loops, duplicate edges or out-of-range endpoints.
Graph make_graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Two simultaneous knapsack constraints over the same n objects.
struct TwoKpInstance {
  std::vector<std::int64_t> weights1;
  std::vector<std::int64_t> weights2;
  std::int64_t capacity1 = 0;
  std::int64_t capacity2 = 0;

  std::size_t objects() const noexcept { return weights1.size(); }
};

/// One step per edge (in edge-list order), one object per vertex. At the
/// step of edge {u, v} objects u and v weigh 1 and all others 0; every
/// capacity and profit is 1 and every bonus is 2*n*m. A stable knapsack is
/// then an independent set, and the optimum equals n(m-1)B + m*alpha(G).
Instance reduce_independent_set(const Graph& g);

/// T = 2 instance with the given weights, unit profits and bonus 2: the
/// optimum equals 2K + 2n, K being the largest number of objects that fit
/// both constraints at once.
Instance reduce_two_kp(const TwoKpInstance& kp);

struct FixedCapacity {
  std::int64_t value;
};
/// C_t = floor(ratio * sum_i w(t,i)).
struct CapacityRatio {
  Rational ratio;
};
using CapacityRule = std::variant<FixedCapacity, CapacityRatio>;

struct RandomParams {
  std::uint64_t seed = 1;
  std::size_t objects = 0;
  std::size_t steps = 1;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 10;
  std::int64_t profit_max = 10;
  std::int64_t bonus_max = 10;
  CapacityRule capacity = CapacityRatio{Rational(1, 2)};
};

/// Reproducible random instance. Uses std::mt19937_64 seeded with `seed`
/// and an explicit rejection-sampling range reduction, so the output is
/// identical on every platform. Draw order: profits, weights, bonuses,
/// each row-major. Profits and bonuses are uniform on [0, max], weights on
/// [weight_min, weight_max].
Instance gen_random(const RandomParams& params);

}  // namespace mkp
