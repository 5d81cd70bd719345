#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

std::int64_t naive_value(const mkp::Instance& inst, const mkp::Schedule& sched) {
  std::int64_t v = 0;
  for (std::size_t t = 0; t < inst.steps(); ++t) {
    std::set<std::size_t> chosen;
    for (std::size_t i = 0; i < inst.objects(); ++i)
      if (sched.taken(t, i)) chosen.insert(i);
    for (auto i : chosen) v += inst.profit(t, i);
  }
  for (std::size_t t = 0; t + 1 < inst.steps(); ++t) {
    std::set<std::size_t> unchanged;  // taken at both steps or at neither
    for (std::size_t i = 0; i < inst.objects(); ++i) {
      if (sched.taken(t, i) && sched.taken(t + 1, i)) unchanged.insert(i);
      if (!sched.taken(t, i) && !sched.taken(t + 1, i)) unchanged.insert(i);
    }
    for (auto i : unchanged) v += inst.bonus(t, i);
  }
  return v;
}

std::int64_t enumerate_optimum(const mkp::Instance& inst) {
  const std::size_t n = inst.objects(), T = inst.steps(), cells = n * T;
  if (cells > 24) throw std::invalid_argument("enumeration oracle is limited to 24 cells");
  std::int64_t best = -1;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    mkp::Schedule s(T, n);
    for (std::size_t c = 0; c < cells; ++c) s.set(c / n, c % n, (code >> c) & 1U);
    bool ok = true;
    for (std::size_t t = 0; t < T && ok; ++t) {
      std::int64_t load = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (s.taken(t, i)) load += inst.weight(t, i);
      ok = load <= inst.capacity(t);
    }
    if (ok) best = std::max(best, naive_value(inst, s));
  }
  return best;
}

std::size_t max_independent_set(const mkp::Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << g.num_vertices); ++set) {
    bool independent = true;
    for (auto [u, v] : g.edges)
      if (((set >> u) & 1U) && ((set >> v) & 1U)) independent = false;
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(set)));
  }
  return best;
}

std::size_t max_two_kp_count(const mkp::TwoKpInstance& kp) {
  const std::size_t n = kp.objects();
  std::size_t best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    std::int64_t a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((set >> i) & 1U) {
        a += kp.weights1[i];
        b += kp.weights2[i];
      }
    if (a <= kp.capacity1 && b <= kp.capacity2)
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(set)));
  }
  return best;
}

mkp::Rational textbook_lp_optimum(const mkp::LpModel& model) {
  using mkp::Rational;
  const std::size_t nv = model.num_vars;
  // rows: model constraints, then x_j <= upper_j for every variable
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& row : model.constraints) {
    std::vector<Rational> r(nv);
    for (const auto& [j, a] : row.terms) r[j] += a;
    A.push_back(std::move(r));
    b.push_back(row.rhs);
  }
  for (std::size_t j = 0; j < nv; ++j) {
    if (model.bounds[j].lower != 0) throw std::invalid_argument("oracle needs zero lower bounds");
    std::vector<Rational> r(nv);
    r[j] = 1;
    A.push_back(std::move(r));
    b.push_back(model.bounds[j].upper);
  }
  const std::size_t m = A.size(), cols = nv + m;
  // Tableau rows [A | I | b]; objective row holds -c (minimize -c.x).
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < nv; ++j) tab[r][j] = A[r][j];
    tab[r][nv + r] = 1;
    tab[r][cols] = b[r];
    if (b[r] < 0) throw std::invalid_argument("oracle needs b >= 0");
  }
  for (std::size_t j = 0; j < nv; ++j) tab[m][j] = -model.objective[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = nv + r;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (tab[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) throw std::runtime_error("unbounded");
    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rational f = tab[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return tab[m][cols];
}

mkp::Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t T, std::int64_t max_value) {
  mkp::RandomParams p;
  p.seed = seed;
  p.objects = n;
  p.steps = T;
  p.weight_min = 1;
  p.weight_max = max_value;
  p.profit_max = max_value;
  p.bonus_max = max_value;
  p.capacity = mkp::CapacityRatio{mkp::Rational(1, 2)};
  return mkp::gen_random(p);
}

}  // namespace oracle
