#include "mkp/simplex.hpp"

#include <ostream>
#include <string>

#include "mkp/error.hpp"

namespace mkp {

std::string LpModel::var_name(std::size_t k) const {
  if (k < steps * objects) return "x_" + std::to_string(k / objects + 1) + "_" + std::to_string(k % objects + 1);
  const std::size_t r = k - steps * objects;
  return "z_" + std::to_string(r / objects + 1) + "_" + std::to_string(r % objects + 1);
}

LpModel build_lp(const Instance& inst, std::span<const StepObject> fixed_zero,
                 const std::optional<std::vector<std::int64_t>>& capacities) {
  const std::size_t T = inst.steps(), n = inst.objects();
  if (capacities) {
    if (capacities->size() != T) throw StructuralError("capacity override must have T entries");
    for (auto c : *capacities)
      if (c < 0) throw ArgumentError("capacity override must be non-negative");
  }

  LpModel m;
  m.steps = T;
  m.objects = n;
  m.num_vars = T * n + (T - 1) * n;
  m.objective.resize(m.num_vars);
  m.bounds.assign(m.num_vars, VarBounds{Rational(0), Rational(1)});
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      m.objective[m.x_index(t, i)] = from_int64(inst.profit(t, i));
      if (t + 1 < T) m.objective[m.z_index(t, i)] = from_int64(inst.bonus(t, i));
    }

  for (const auto& f : fixed_zero) {
    if (f.step >= T || f.object >= n)
      throw ArgumentError("fixed variable (" + std::to_string(f.step) + "," + std::to_string(f.object) +
                          ") out of range");
    m.bounds[m.x_index(f.step, f.object)].upper = 0;
  }

  m.constraints.reserve(T + 2 * (T - 1) * n);
  for (std::size_t t = 0; t < T; ++t) {
    LinearRow row;
    row.name = "cap_" + std::to_string(t + 1);
    for (std::size_t i = 0; i < n; ++i)
      if (inst.weight(t, i) != 0) row.terms.emplace_back(m.x_index(t, i), from_int64(inst.weight(t, i)));
    row.rhs = from_int64(capacities ? (*capacities)[t] : inst.capacity(t));
    m.constraints.push_back(std::move(row));
  }
  for (std::size_t t = 0; t + 1 < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      const auto suffix = std::to_string(t + 1) + "_" + std::to_string(i + 1);
      m.constraints.push_back(LinearRow{
          "stay_up_" + suffix,
          {{m.z_index(t, i), Rational(1)}, {m.x_index(t, i), Rational(-1)}, {m.x_index(t + 1, i), Rational(1)}},
          Rational(1)});
      m.constraints.push_back(LinearRow{
          "stay_down_" + suffix,
          {{m.z_index(t, i), Rational(1)}, {m.x_index(t, i), Rational(1)}, {m.x_index(t + 1, i), Rational(-1)}},
          Rational(1)});
    }
  return m;
}

namespace {

// Dense tableau B^-1 [A | I] with implicit bounds. Structural variables
// occupy columns [0, nv), slacks [nv, nv + m). Slacks have no upper bound.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LpModel& model)
      : model_(model),
        rows_(model.constraints.size()),
        nv_(model.num_vars),
        cols_(nv_ + rows_),
        tab_(rows_ * cols_),
        reduced_(cols_),
        beta_(rows_),
        basis_(rows_),
        at_upper_(cols_, false),
        is_basic_(cols_, false) {
    if (model.objective.size() != nv_ || model.bounds.size() != nv_)
      throw StructuralError("model vectors disagree with num_vars");
    for (std::size_t j = 0; j < nv_; ++j) {
      if (model.bounds[j].lower > model.bounds[j].upper) throw ArgumentError("empty variable bound interval");
      reduced_[j] = model.objective[j];
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational activity = 0;
      for (const auto& [j, a] : model.constraints[r].terms) {
        if (j >= nv_) throw StructuralError("constraint references unknown variable");
        at(r, j) += a;
        activity += a * model.bounds[j].lower;
      }
      at(r, nv_ + r) = 1;
      basis_[r] = nv_ + r;
      is_basic_[nv_ + r] = true;
      beta_[r] = model.constraints[r].rhs - activity;
      if (sgn(beta_[r]) < 0)
        throw ArgumentError("the all-lower-bound point violates row '" + model.constraints[r].name + "'");
    }
  }

  FractionalSolution run() {
    LpStats stats;
    std::vector<std::size_t> nz;
    while (true) {
      const auto entering = choose_entering();
      if (!entering) break;
      const std::size_t j = *entering;
      const int dir = at_upper_[j] ? -1 : 1;

      // Ratio test. The entering variable's own bound flip competes with
      // the basic variables; ties go to the smallest variable index.
      bool have_limit = false;
      Rational theta;
      std::size_t leave_var = j;
      std::size_t leave_row = rows_;
      bool leave_to_upper = false;
      if (j < nv_) {
        theta = upper(j) - lower(j);
        have_limit = true;
      }
      Rational limit;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& a = at(r, j);
        const int s = sgn(a) * dir;
        if (s == 0) continue;
        const std::size_t q = basis_[r];
        if (s > 0) {
          limit = (beta_[r] - lower(q)) / a;
          if (dir < 0) limit = -limit;
        } else {
          if (q >= nv_) continue;  // slack: unbounded above
          limit = (upper(q) - beta_[r]) / a;
          if (dir > 0) limit = -limit;
        }
        const int cmp = have_limit ? cmp_rational(limit, theta) : -1;
        if (cmp < 0 || (cmp == 0 && q < leave_var)) {
          theta = limit;
          have_limit = true;
          leave_var = q;
          leave_row = r;
          leave_to_upper = s < 0;
        }
      }
      if (!have_limit) throw UnboundedError("LP objective is unbounded");

      if (sgn(theta) != 0) {
        const Rational step = dir > 0 ? theta : Rational(-theta);
        for (std::size_t r = 0; r < rows_; ++r)
          if (sgn(at(r, j)) != 0) beta_[r] -= at(r, j) * step;
      }

      if (leave_row == rows_) {
        at_upper_[j] = !at_upper_[j];
        ++stats.bound_flips;
        continue;
      }

      const Rational entering_value = (at_upper_[j] ? upper(j) : lower(j)) + (dir > 0 ? theta : Rational(-theta));
      at_upper_[leave_var] = leave_to_upper;
      is_basic_[leave_var] = false;
      is_basic_[j] = true;
      at_upper_[j] = false;
      basis_[leave_row] = j;
      beta_[leave_row] = entering_value;
      pivot(leave_row, j, nz);
      ++stats.pivots;
    }
    return extract(stats);
  }

 private:
  static int cmp_rational(const Rational& a, const Rational& b) { return cmp(a, b); }

  Rational& at(std::size_t r, std::size_t c) { return tab_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return tab_[r * cols_ + c]; }
  const Rational& lower(std::size_t j) const { return j < nv_ ? model_.bounds[j].lower : zero_; }
  const Rational& upper(std::size_t j) const { return model_.bounds[j].upper; }  // structural only

  std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_basic_[j]) continue;
      if (j < nv_ && lower(j) == upper(j)) continue;
      const int s = sgn(reduced_[j]);
      if ((s > 0 && !at_upper_[j]) || (s < 0 && at_upper_[j])) return j;
    }
    return std::nullopt;
  }

  void pivot(std::size_t pr, std::size_t pc, std::vector<std::size_t>& nz) {
    const Rational inv = 1 / at(pr, pc);
    nz.clear();
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(at(pr, c)) != 0) {
        at(pr, c) *= inv;
        nz.push_back(c);
      }
    Rational f;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || sgn(at(r, pc)) == 0) continue;
      f = at(r, pc);
      for (std::size_t c : nz) at(r, c) -= f * at(pr, c);
    }
    if (sgn(reduced_[pc]) != 0) {
      f = reduced_[pc];
      for (std::size_t c : nz) reduced_[c] -= f * at(pr, c);
    }
  }

  FractionalSolution extract(const LpStats& stats) const {
    std::vector<Rational> value(nv_);
    for (std::size_t j = 0; j < nv_; ++j) value[j] = at_upper_[j] ? upper(j) : lower(j);
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < nv_) value[basis_[r]] = beta_[r];

    FractionalSolution sol;
    sol.steps = model_.steps;
    sol.objects = model_.objects;
    sol.is_basic = true;
    sol.stats = stats;
    for (std::size_t j = 0; j < nv_; ++j) sol.objective_value += model_.objective[j] * value[j];
    const std::size_t nx = model_.steps * model_.objects;
    if (nx + (model_.steps > 0 ? (model_.steps - 1) * model_.objects : 0) == nv_) {
      sol.x_values.assign(value.begin(), value.begin() + static_cast<std::ptrdiff_t>(nx));
      sol.z_values.assign(value.begin() + static_cast<std::ptrdiff_t>(nx), value.end());
    } else {
      sol.x_values = std::move(value);  // not a multistage layout
    }
    return sol;
  }

  const LpModel& model_;
  std::size_t rows_, nv_, cols_;
  std::vector<Rational> tab_;
  std::vector<Rational> reduced_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<bool> at_upper_;
  std::vector<bool> is_basic_;
  Rational zero_{0};
};

}  // namespace

FractionalSolution solve_basic(const LpModel& model) { return BoundedSimplex(model).run(); }

FractionalSolution normalize_z(const LpModel& model, const FractionalSolution& sol) {
  FractionalSolution out = sol;
  bool changed = false;
  for (std::size_t t = 0; t + 1 < sol.steps; ++t)
    for (std::size_t i = 0; i < sol.objects; ++i) {
      Rational z = 1 - abs(sol.x(t + 1, i) - sol.x(t, i));
      Rational& slot = out.z_values[t * sol.objects + i];
      if (slot != z) {
        slot = z;
        changed = true;
      }
    }
  out.objective_value = 0;
  for (std::size_t t = 0; t < sol.steps; ++t)
    for (std::size_t i = 0; i < sol.objects; ++i) {
      out.objective_value += model.objective[model.x_index(t, i)] * out.x(t, i);
      if (t + 1 < sol.steps) out.objective_value += model.objective[model.z_index(t, i)] * out.z(t, i);
    }
  out.is_basic = sol.is_basic && !changed;
  return out;
}

FractionalObjects count_fractional_objects(const FractionalSolution& sol) {
  FractionalObjects out;
  for (std::size_t i = 0; i < sol.objects; ++i) {
    bool frac = false;
    for (std::size_t t = 0; t < sol.steps && !frac; ++t) {
      frac = !is_integral(sol.x(t, i));
      if (!frac && t + 1 < sol.steps) frac = !is_integral(sol.z(t, i));
    }
    if (frac) out.objects.push_back(i);
  }
  out.count = out.objects.size();
  return out;
}

Rational fractional_reward(const LpModel& model, const FractionalSolution& sol, std::size_t i) {
  if (i >= sol.objects) throw ArgumentError("object index " + std::to_string(i) + " out of range");
  Rational g = 0;
  for (std::size_t t = 0; t < sol.steps; ++t) {
    g += model.objective[model.x_index(t, i)] * sol.x(t, i);
    if (t + 1 < sol.steps) g += model.objective[model.z_index(t, i)] * sol.z(t, i);
  }
  return g;
}

namespace {

std::string lp_number(const Rational& q) { return is_integral(q) ? to_string(q) : to_decimal(q, 17); }

void write_terms(std::ostream& out, const LpModel& model,
                 const std::vector<std::pair<std::size_t, Rational>>& terms) {
  bool first = true;
  for (const auto& [j, a] : terms) {
    if (sgn(a) == 0) continue;
    const bool neg = sgn(a) < 0;
    out << (first ? (neg ? " - " : " ") : (neg ? " - " : " + "));
    const Rational mag = abs(a);
    if (mag != 1) out << lp_number(mag) << ' ';
    out << model.var_name(j);
    first = false;
  }
  if (first) out << " 0 " << (model.num_vars > 0 ? model.var_name(0) : "dummy");
}

}  // namespace

void write_lp_format(const LpModel& model, std::ostream& out) {
  out << "\\ multistage knapsack LP relaxation: T=" << model.steps << " n=" << model.objects << "\n";
  out << "Maximize\n obj:";
  std::vector<std::pair<std::size_t, Rational>> obj;
  for (std::size_t j = 0; j < model.num_vars; ++j) obj.emplace_back(j, model.objective[j]);
  write_terms(out, model, obj);
  out << "\nSubject To\n";
  for (const auto& row : model.constraints) {
    out << ' ' << row.name << ':';
    write_terms(out, model, row.terms);
    out << " <= " << lp_number(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < model.num_vars; ++j)
    out << ' ' << lp_number(model.bounds[j].lower) << " <= " << model.var_name(j)
        << " <= " << lp_number(model.bounds[j].upper) << "\n";
  out << "End\n";
}

}  // namespace mkp
