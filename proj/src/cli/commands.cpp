#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mkp/cli.hpp"
#include "mkp/error.hpp"
#include "mkp/io.hpp"
#include "mkp/simplex.hpp"

namespace mkp::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path, "cannot open file");
  return in;
}

// Writes through `fallback` when path is empty.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ostringstream buf;
  fn(buf);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ArgumentError("cannot write '" + path + "'");
  file << buf.str();
  if (!file) throw Error("write to '" + path + "' failed");
}

double parse_positive_double(std::string_view key, std::string_view text) {
  const Rational q = parse_rational(text);
  if (sgn(q) < 0) throw ArgumentError("guard '" + std::string(key) + "' must be non-negative");
  return q.get_d();
}

}  // namespace

Guards parse_guards(std::string_view spec, Guards base) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ArgumentError("guard override '" + std::string(item) + "' lacks '='");
    const auto key = item.substr(0, eq), value = item.substr(eq + 1);
    const double v = parse_positive_double(key, value);
    if (key == "brute")
      base.brute_cells = static_cast<std::size_t>(v);
    else if (key == "dp")
      base.dp_entries = v;
    else if (key == "ptas")
      base.ptas_work = v;
    else
      throw ArgumentError("unknown guard '" + std::string(key) + "' (expected brute, dp or ptas)");
  }
  return base;
}

Guards default_guards() {
  const char* env = std::getenv("MKP_GUARDS");
  return env ? parse_guards(env, Guards{}) : Guards{};
}

bool is_known_algorithm(std::string_view name) {
  return name == "brute" || name == "dp" || name == "lp-bound" || name == "round-lp" || name == "ptas" ||
         name == "ptas-general";
}

RunRecord run_algorithm(const Instance& inst, std::string_view algorithm, const AlgoParams& params,
                        const Guards& guards) {
  if (!is_known_algorithm(algorithm)) throw ArgumentError("unknown algorithm '" + std::string(algorithm) + "'");
  const bool needs_eps = algorithm == "ptas" || algorithm == "ptas-general";
  if (needs_eps && !params.epsilon) throw ArgumentError("algorithm '" + std::string(algorithm) + "' needs --epsilon");
  if (params.epsilon && sgn(*params.epsilon) <= 0) throw ArgumentError("epsilon must be positive");

  RunRecord rec;
  rec.algorithm = algorithm;
  rec.params = params;
  rec.guards = guards;
  const auto start = std::chrono::steady_clock::now();

  if (algorithm == "brute" || algorithm == "dp") {
    auto r = algorithm == "brute" ? brute_force(inst, guards.brute_cells) : dp_solve(inst, guards.dp_entries);
    rec.schedule = std::move(r.schedule);
    rec.schedules_examined = r.schedules_examined;
    rec.dp_table_entries = r.table_entries;
  } else if (algorithm == "lp-bound") {
    const LpModel model = build_lp(inst);
    const auto sol = normalize_z(model, solve_basic(model));
    rec.lp_bound = sol.objective_value;
    rec.fractional_objects = count_fractional_objects(sol).count;
    rec.lp_solves = 1;
  } else if (algorithm == "round-lp") {
    auto r = round_lp(inst);
    rec.schedule = std::move(r.schedule);
    rec.lp_bound = r.lp_value;
    rec.fractional_objects = r.fractional.count;
    rec.lp_solves = 1;
  } else {
    PtasOptions opt;
    opt.epsilon = *params.epsilon;
    opt.ell = params.ell;
    opt.work_limit = guards.ptas_work;
    PtasReport report;
    if (algorithm == "ptas") {
      report = ptas_constant(inst, opt);
    } else {
      IntervalSolver inner;
      if (params.inner == "ptas")
        inner = ptas_interval_solver(opt);
      else if (params.inner == "dp")
        inner = dp_interval_solver(guards.dp_entries);
      else
        throw ArgumentError("unknown inner solver '" + params.inner + "' (expected ptas or dp)");
      auto general = ptas_general(inst, opt.epsilon, inner);
      rec.horizon = general.horizon;
      report = std::move(general.summary);
    }
    rec.schedule = std::move(report.best_schedule);
    rec.ell = report.ell;
    rec.lp_solves = report.lp_solves;
    rec.assignments_examined = report.assignments_examined;
  }

  if (rec.schedule) {
    rec.breakdown = evaluate(inst, *rec.schedule);
    rec.feasible = is_feasible(inst, *rec.schedule);
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void write_result(std::ostream& out, const RunRecord& rec, bool timing) {
  out << "mkp-result 1\n";
  out << "instance " << rec.instance << '\n';
  out << "algorithm " << rec.algorithm << '\n';
  if (rec.params.epsilon) out << "epsilon " << to_string(*rec.params.epsilon) << '\n';
  if (rec.ell) out << "ell " << *rec.ell << '\n';
  if (rec.horizon) out << "horizon " << *rec.horizon << '\n';
  if (rec.algorithm == "ptas-general") out << "inner " << rec.params.inner << '\n';
  out << "guards brute=" << rec.guards.brute_cells << " dp=" << rec.guards.dp_entries << " ptas=" << rec.guards.ptas_work
      << '\n';
  if (rec.lp_bound) {
    out << "lp_bound " << to_string(*rec.lp_bound) << '\n';
    out << "lp_bound_decimal " << to_decimal(*rec.lp_bound) << '\n';
  }
  if (rec.fractional_objects) out << "fractional_objects " << *rec.fractional_objects << '\n';
  if (rec.schedule) {
    out << "T " << rec.schedule->steps() << '\n';
    out << "n " << rec.schedule->objects() << '\n';
    out << "value " << rec.breakdown.total << '\n';
    out << "feasible " << (rec.feasible ? 1 : 0) << '\n';
    out << "knapsack_profit " << rec.breakdown.knapsack_profit << '\n';
    out << "transition_profit " << rec.breakdown.transition_profit << '\n';
    out << "total " << rec.breakdown.total << '\n';
    out << "per_object_reward";
    for (auto g : rec.breakdown.per_object_reward) out << ' ' << g;
    out << '\n';
  }
  out << "lp_solves " << rec.lp_solves << '\n';
  out << "assignments_examined " << rec.assignments_examined << '\n';
  out << "schedules_examined " << rec.schedules_examined << '\n';
  out << "dp_table_entries " << rec.dp_table_entries << '\n';
  if (timing) out << "wall_ms " << rec.wall_ms << '\n';
  if (rec.schedule) write_schedule_block(out, *rec.schedule);
  out << "end\n";
}

int report_exception(std::ostream& err) {
  try {
    throw;
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefusal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const StructuralError& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kInputError;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kInternalError;
  }
}

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto in = open_input(options.instance_path);
    const Instance inst = read_instance(in);
    if (!options.dump_lp_path.empty())
      with_output(options.dump_lp_path, out, [&](std::ostream& o) { write_lp_format(build_lp(inst), o); });
    RunRecord rec = run_algorithm(inst, options.algorithm, options.params, options.guards);
    rec.instance = options.instance_path;
    with_output(options.out_path, out, [&](std::ostream& o) { write_result(o, rec, options.timing); });
    return kOk;
  } catch (...) {
    return report_exception(err);
  }
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  try {
    auto iin = open_input(options.instance_path);
    const Instance inst = read_instance(iin);
    auto sin = open_input(options.schedule_path);
    const Schedule sched = read_schedule(sin);
    check_shape(inst, sched);

    const auto bd = evaluate(inst, sched);
    bool feasible = true;
    out << "mkp-verify 1\n";
    out << "T " << inst.steps() << '\n';
    out << "n " << inst.objects() << '\n';
    out << "steps\n";
    for (std::size_t t = 0; t < inst.steps(); ++t) {
      const auto load = step_load(inst, sched, t);
      const bool ok = load <= inst.capacity(t);
      feasible = feasible && ok;
      out << "  " << t + 1 << ' ' << load << ' ' << inst.capacity(t) << ' ' << inst.capacity(t) - load << ' '
          << (ok ? "ok" : "violated") << '\n';
      if (!ok)
        err << "step " << t + 1 << " exceeds its capacity: load " << load << " > " << inst.capacity(t) << '\n';
    }
    out << "feasible " << (feasible ? 1 : 0) << '\n';
    out << "knapsack_profit " << bd.knapsack_profit << '\n';
    out << "transition_profit " << bd.transition_profit << '\n';
    out << "total " << bd.total << '\n';
    out << "per_object_reward";
    for (auto g : bd.per_object_reward) out << ' ' << g;
    out << "\nend\n";
    return feasible ? kOk : kCheckFailed;
  } catch (...) {
    return report_exception(err);
  }
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Instance> inst;
    if (options.family == "random") {
      inst = gen_random(options.random);
    } else if (options.family == "independent-set") {
      auto in = open_input(options.input_path);
      inst = reduce_independent_set(read_graph(in));
    } else if (options.family == "two-kp") {
      auto in = open_input(options.input_path);
      inst = reduce_two_kp(read_two_kp(in));
    } else {
      throw ArgumentError("unknown family '" + options.family + "' (expected random, independent-set or two-kp)");
    }
    with_output(options.out_path, out, [&](std::ostream& o) { write_instance(o, *inst); });
    return kOk;
  } catch (...) {
    return report_exception(err);
  }
}

}  // namespace mkp::cli
