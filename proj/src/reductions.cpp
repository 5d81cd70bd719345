#include "mkp/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "mkp/error.hpp"

namespace mkp {

Graph make_graph(std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  g.num_vertices = num_vertices;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices)
      throw ArgumentError("edge endpoint out of range (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      throw ArgumentError("duplicate edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
    g.edges.emplace_back(e.first, e.second);
  }
  return g;
}

Instance reduce_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices, m = g.edges.size();
  if (m == 0) throw ArgumentError("the independent-set reduction needs at least one edge");
  const std::int64_t bonus = checked_add(0, static_cast<std::int64_t>(2 * n * m));
  IntMatrix profits(m, n, 1), weights(m, n, 0), bonuses(m - 1, n, bonus);
  for (std::size_t t = 0; t < m; ++t) {
    weights(t, g.edges[t].first) = 1;
    weights(t, g.edges[t].second) = 1;
  }
  return Instance(m, n, std::move(profits), std::move(weights), std::move(bonuses), std::vector<std::int64_t>(m, 1));
}

Instance reduce_two_kp(const TwoKpInstance& kp) {
  const std::size_t n = kp.objects();
  if (kp.weights2.size() != n) throw StructuralError("both weight vectors need the same length");
  IntMatrix weights(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    weights(0, i) = kp.weights1[i];
    weights(1, i) = kp.weights2[i];
  }
  return Instance(2, n, IntMatrix(2, n, 1), std::move(weights), IntMatrix(1, n, 2), {kp.capacity1, kp.capacity2});
}

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());  // full 64-bit span
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

}  // namespace

Instance gen_random(const RandomParams& p) {
  if (p.steps == 0) throw ArgumentError("random instances need T >= 1");
  if (p.weight_min < 0 || p.weight_max < p.weight_min) throw ArgumentError("need 0 <= weight_min <= weight_max");
  if (p.profit_max < 0 || p.bonus_max < 0) throw ArgumentError("profit and bonus maxima must be non-negative");

  std::mt19937_64 rng(p.seed);
  const std::size_t T = p.steps, n = p.objects;
  IntMatrix profits(T, n), weights(T, n), bonuses(T - 1, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) profits(t, i) = uniform(rng, 0, p.profit_max);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) weights(t, i) = uniform(rng, p.weight_min, p.weight_max);
  for (std::size_t t = 0; t + 1 < T; ++t)
    for (std::size_t i = 0; i < n; ++i) bonuses(t, i) = uniform(rng, 0, p.bonus_max);

  std::vector<std::int64_t> caps(T);
  for (std::size_t t = 0; t < T; ++t) {
    if (const auto* fixed = std::get_if<FixedCapacity>(&p.capacity)) {
      if (fixed->value < 0) throw ArgumentError("fixed capacity must be non-negative");
      caps[t] = fixed->value;
    } else {
      const auto& ratio = std::get<CapacityRatio>(p.capacity).ratio;
      if (sgn(ratio) < 0) throw ArgumentError("capacity ratio must be non-negative");
      std::int64_t total = 0;
      for (std::size_t i = 0; i < n; ++i) total = checked_add(total, weights(t, i));
      const Rational c = ratio * from_int64(total);
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      if (!f.fits_slong_p()) throw OverflowError("capacity does not fit in 64 bits");
      caps[t] = f.get_si();
    }
  }
  return Instance(T, n, std::move(profits), std::move(weights), std::move(bonuses), std::move(caps));
}

}  // namespace mkp
