#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mkp/cli.hpp"
#include "mkp/error.hpp"
#include "mkp/io.hpp"
#include "mkp/simplex.hpp"

namespace mkp::cli {

namespace {

struct ManifestRow {
  std::size_t line;
  std::string instance;
  std::string algorithm;
  AlgoParams params;
};

std::vector<ManifestRow> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path, "cannot open manifest");
  std::vector<ManifestRow> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    ManifestRow row{line_no, {}, {}, {}};
    if (!(ls >> row.instance)) continue;
    if (!(ls >> row.algorithm)) throw ParseError(line_no, "algorithm", "missing algorithm");
    if (!is_known_algorithm(row.algorithm)) throw ParseError(line_no, "algorithm", "unknown '" + row.algorithm + "'");
    std::string kv;
    while (ls >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, kv, "expected key=value");
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      try {
        if (key == "epsilon")
          row.params.epsilon = parse_rational(value);
        else if (key == "ell")
          row.params.ell = static_cast<std::size_t>(std::stoull(value));
        else if (key == "inner")
          row.params.inner = value;
        else
          throw ParseError(line_no, key, "unknown parameter");
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, key, "bad value '" + value + "'");
      } catch (const ArgumentError& e) {
        throw ParseError(line_no, key, e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct References {
  std::optional<Instance> instance;
  std::string load_error;
  std::optional<std::int64_t> dp_value;
  std::optional<Rational> lp_bound;
};

std::string ratio(const Rational& value, const std::optional<Rational>& ref) {
  if (!ref || sgn(*ref) == 0) return "-";
  return to_decimal(value / *ref, 6);
}

}  // namespace

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<ManifestRow> rows;
  try {
    rows = read_manifest(options.manifest_path);
  } catch (...) {
    return report_exception(err);
  }
  const auto base = std::filesystem::path(options.manifest_path).parent_path();

  std::map<std::string, References> refs;
  auto references = [&](const std::string& name) -> References& {
    auto [it, inserted] = refs.try_emplace(name);
    if (!inserted) return it->second;
    References& r = it->second;
    std::filesystem::path p(name);
    if (p.is_relative()) p = base / p;
    try {
      std::ifstream in(p);
      if (!in) throw ParseError(0, p.string(), "cannot open file");
      r.instance = read_instance(in);
    } catch (const std::exception& e) {
      r.load_error = e.what();
      return r;
    }
    try {
      r.dp_value = dp_solve(*r.instance, options.guards.dp_entries).breakdown.total;
    } catch (const GuardRefusal&) {
    }
    const LpModel model = build_lp(*r.instance);
    r.lp_bound = normalize_z(model, solve_basic(model)).objective_value;
    return r;
  };

  std::ostringstream table;
  table << "row\tinstance\talgorithm\tepsilon\tell\tvalue\tdp_value\tlp_bound\tratio_dp\tratio_lp\tlp_solves\t"
           "assignments_examined\tdp_table_entries";
  if (options.timing) table << "\twall_ms";
  table << "\tstatus\n";

  std::size_t failures = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    table << k + 1 << '\t' << row.instance << '\t' << row.algorithm << '\t'
          << (row.params.epsilon ? to_string(*row.params.epsilon) : "-") << '\t';
    std::string status = "ok";
    try {
      References& ref = references(row.instance);
      if (!ref.instance) throw ParseError(row.line, row.instance, ref.load_error);
      RunRecord rec = run_algorithm(*ref.instance, row.algorithm, row.params, options.guards);
      const Rational value = rec.schedule ? from_int64(rec.breakdown.total) : *rec.lp_bound;
      const std::optional<Rational> dp_ref =
          ref.dp_value ? std::optional<Rational>(from_int64(*ref.dp_value)) : std::nullopt;
      table << (rec.ell ? std::to_string(*rec.ell) : "-") << '\t' << to_string(value) << '\t'
            << (ref.dp_value ? std::to_string(*ref.dp_value) : "-") << '\t' << to_string(*ref.lp_bound) << '\t'
            << ratio(value, dp_ref) << '\t' << ratio(value, ref.lp_bound) << '\t' << rec.lp_solves << '\t'
            << rec.assignments_examined << '\t' << rec.dp_table_entries;
      if (options.timing) table << '\t' << rec.wall_ms;
      if (rec.schedule && !rec.feasible) status = "error: infeasible schedule";
    } catch (...) {
      std::ostringstream msg;
      report_exception(msg);
      status = "error: " + msg.str();
      while (!status.empty() && status.back() == '\n') status.pop_back();
      for (auto& c : status)
        if (c == '\t' || c == '\n') c = ' ';
      table << "-\t-\t-\t-\t-\t-\t-\t-\t-";
      if (options.timing) table << "\t-";
    }
    if (status != "ok") {
      ++failures;
      err << "row " << k + 1 << " (" << row.instance << ", " << row.algorithm << "): " << status << '\n';
    }
    table << '\t' << status << '\n';
  }

  try {
    if (options.out_path.empty()) {
      out << table.str();
    } else {
      std::ofstream file(options.out_path, std::ios::binary);
      if (!file) throw ArgumentError("cannot write '" + options.out_path + "'");
      file << table.str();
    }
  } catch (...) {
    return report_exception(err);
  }
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace mkp::cli
