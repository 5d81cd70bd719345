#include "mkp/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "mkp/error.hpp"

namespace mkp {

namespace {

constexpr std::string_view kInstanceKind = "mkp-instance";
constexpr std::string_view kScheduleKind = "mkp-schedule";
constexpr std::string_view kResultKind = "mkp-result";
constexpr std::string_view kVersion = "1";

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.emplace_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::int64_t parse_int(const std::string& token, std::size_t line, const std::string& field) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, field, "integer out of range: '" + token + "'");
  if (ec != std::errc() || ptr != last) throw ParseError(line, field, "expected an integer, got '" + token + "'");
  return v;
}

std::int64_t parse_nonneg(const std::string& token, std::size_t line, const std::string& field) {
  const auto v = parse_int(token, line, field);
  if (v < 0) throw ParseError(line, field, "value must be non-negative");
  return v;
}

const Field& require(const Document& doc, std::string_view key, std::size_t fallback_line) {
  const Field* f = doc.find(key);
  if (!f) throw ParseError(fallback_line, std::string(key), "missing field");
  return *f;
}

std::size_t scalar_size(const Field& f) {
  if (f.values.size() != 1 || !f.rows.empty()) throw ParseError(f.line, f.key, "expected exactly one value");
  return static_cast<std::size_t>(parse_nonneg(f.values[0], f.line, f.key));
}

IntMatrix matrix_field(const Field& f, std::size_t rows, std::size_t cols) {
  if (!f.values.empty()) throw ParseError(f.line, f.key, "matrix rows must follow on indented lines");
  // A matrix with zero columns is written without rows.
  if (cols == 0 && f.rows.empty()) return IntMatrix(rows, 0);
  if (f.rows.size() != rows)
    throw ParseError(f.line, f.key, "expected " + std::to_string(rows) + " rows, found " + std::to_string(f.rows.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (f.rows[r].size() != cols)
      throw ParseError(f.row_lines[r], f.key,
                       "expected " + std::to_string(cols) + " entries, found " + std::to_string(f.rows[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_nonneg(f.rows[r][c], f.row_lines[r], f.key);
  }
  return m;
}

void write_row(std::ostream& out, std::span<const std::int64_t> row) {
  out << ' ';
  for (auto v : row) out << ' ' << v;
  out << '\n';
}

void write_matrix(std::ostream& out, const char* key, const IntMatrix& m) {
  out << key << '\n';
  if (m.cols() == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) write_row(out, m.row(r));
}

}  // namespace

const Field* Document::find(std::string_view key) const {
  for (const auto& f : fields)
    if (f.key == key) return &f;
  return nullptr;
}

Document parse_document(std::istream& in) {
  Document doc;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false, ended = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_comment(raw);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (ended) throw ParseError(line_no, tokens[0], "content after 'end'");
    const bool indented = line.front() == ' ' || line.front() == '\t';
    if (!have_header) {
      if (indented || tokens.size() != 2) throw ParseError(line_no, tokens[0], "expected '<kind> <version>' header");
      doc.kind = tokens[0];
      doc.version = tokens[1];
      have_header = true;
      continue;
    }
    if (indented) {
      if (doc.fields.empty()) throw ParseError(line_no, tokens[0], "indented row without a preceding key");
      auto& f = doc.fields.back();
      if (!f.values.empty()) throw ParseError(line_no, f.key, "a field has either inline values or rows, not both");
      f.rows.push_back(std::move(tokens));
      f.row_lines.push_back(line_no);
      continue;
    }
    if (tokens[0] == "end") {
      if (tokens.size() != 1) throw ParseError(line_no, "end", "unexpected tokens after 'end'");
      ended = true;
      continue;
    }
    if (doc.find(tokens[0])) throw ParseError(line_no, tokens[0], "duplicate field");
    Field f;
    f.key = tokens[0];
    f.values.assign(tokens.begin() + 1, tokens.end());
    f.line = line_no;
    doc.fields.push_back(std::move(f));
  }
  if (!have_header) throw ParseError(line_no, "header", "empty document");
  if (!ended) throw ParseError(line_no, "end", "missing 'end' line (truncated document?)");
  return doc;
}

Instance read_instance(std::istream& in) {
  const Document doc = parse_document(in);
  if (doc.kind != kInstanceKind) throw ParseError(1, "header", "expected '" + std::string(kInstanceKind) + "', got '" + doc.kind + "'");
  if (doc.version != kVersion) throw ParseError(1, "header", "unsupported version '" + doc.version + "'");
  const std::size_t T = scalar_size(require(doc, "T", 1));
  const std::size_t n = scalar_size(require(doc, "n", 1));
  if (T == 0) throw ParseError(require(doc, "T", 1).line, "T", "T must be at least 1");

  const Field& capf = require(doc, "capacities", 1);
  if (!capf.rows.empty() || capf.values.size() != T)
    throw ParseError(capf.line, "capacities", "expected " + std::to_string(T) + " values on one line");
  std::vector<std::int64_t> caps;
  for (const auto& tok : capf.values) caps.push_back(parse_nonneg(tok, capf.line, "capacities"));

  auto profits = matrix_field(require(doc, "profits", 1), T, n);
  auto weights = matrix_field(require(doc, "weights", 1), T, n);
  auto bonuses = matrix_field(require(doc, "bonuses", 1), T - 1, n);
  for (const auto& f : doc.fields)
    if (f.key != "T" && f.key != "n" && f.key != "capacities" && f.key != "profits" && f.key != "weights" &&
        f.key != "bonuses")
      throw ParseError(f.line, f.key, "unknown field");
  try {
    return Instance(T, n, std::move(profits), std::move(weights), std::move(bonuses), std::move(caps));
  } catch (const OverflowError& e) {
    throw ParseError(1, "profits", e.what());
  }
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << kInstanceKind << ' ' << kVersion << '\n';
  out << "T " << inst.steps() << '\n';
  out << "n " << inst.objects() << '\n';
  out << "capacities";
  for (auto c : inst.capacities()) out << ' ' << c;
  out << '\n';
  write_matrix(out, "profits", inst.profits());
  write_matrix(out, "weights", inst.weights());
  write_matrix(out, "bonuses", inst.bonuses());
  out << "end\n";
}

Schedule read_schedule(std::istream& in) {
  const Document doc = parse_document(in);
  if (doc.kind != kScheduleKind && doc.kind != kResultKind)
    throw ParseError(1, "header", "expected a schedule or result document, got '" + doc.kind + "'");
  if (doc.version != kVersion) throw ParseError(1, "header", "unsupported version '" + doc.version + "'");
  const std::size_t T = scalar_size(require(doc, "T", 1));
  const std::size_t n = scalar_size(require(doc, "n", 1));
  const Field& f = require(doc, "schedule", 1);
  const IntMatrix m = matrix_field(f, T, n);
  Schedule s(T, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t i = 0; i < n; ++i) {
      if (m(t, i) > 1) throw ParseError(f.row_lines[t], "schedule", "entries must be 0 or 1");
      s.set(t, i, m(t, i) == 1);
    }
  return s;
}

void write_schedule_block(std::ostream& out, const Schedule& sched) {
  out << "schedule\n";
  if (sched.objects() == 0) return;
  for (std::size_t t = 0; t < sched.steps(); ++t) {
    out << ' ';
    for (std::size_t i = 0; i < sched.objects(); ++i) out << ' ' << (sched.taken(t, i) ? 1 : 0);
    out << '\n';
  }
}

void write_schedule(std::ostream& out, const Schedule& sched) {
  out << kScheduleKind << ' ' << kVersion << '\n';
  out << "T " << sched.steps() << '\n';
  out << "n " << sched.objects() << '\n';
  write_schedule_block(out, sched);
  out << "end\n";
}

namespace {

// Significant lines of a plain whitespace-separated file, with line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> plain_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(strip_comment(raw));
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
  }
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto lines = plain_lines(in);
  if (lines.empty()) throw ParseError(1, "header", "empty graph file");
  const auto& [hl, head] = lines[0];
  if (head.size() != 2) throw ParseError(hl, "header", "expected 'n m'");
  const auto n = static_cast<std::size_t>(parse_nonneg(head[0], hl, "n"));
  const auto m = static_cast<std::size_t>(parse_nonneg(head[1], hl, "m"));
  if (lines.size() != m + 1)
    throw ParseError(lines.back().first, "edges",
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k <= m; ++k) {
    const auto& [ln, tok] = lines[k];
    if (tok.size() != 2) throw ParseError(ln, "edge", "expected 'u v'");
    const auto u = parse_nonneg(tok[0], ln, "edge"), v = parse_nonneg(tok[1], ln, "edge");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
      throw ParseError(ln, "edge", "vertex out of range 1.." + std::to_string(n));
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  try {
    return make_graph(n, edges);
  } catch (const ArgumentError& e) {
    throw ParseError(hl, "edges", e.what());
  }
}

TwoKpInstance read_two_kp(std::istream& in) {
  const auto lines = plain_lines(in);
  if (lines.empty()) throw ParseError(1, "n", "empty 2-KP file");
  const auto& [hl, head] = lines[0];
  if (head.size() != 1) throw ParseError(hl, "n", "expected a single object count");
  const auto n = static_cast<std::size_t>(parse_nonneg(head[0], hl, "n"));
  // With n = 0 the two weight lines are absent.
  const std::size_t expected = n == 0 ? 2 : 4;
  if (lines.size() != expected)
    throw ParseError(lines.back().first, "layout", "expected " + std::to_string(expected) + " non-empty lines");
  TwoKpInstance kp;
  auto read_weights = [&](std::size_t k, std::vector<std::int64_t>& w, const char* name) {
    const auto& [ln, tok] = lines[k];
    if (tok.size() != n) throw ParseError(ln, name, "expected " + std::to_string(n) + " weights");
    for (const auto& s : tok) w.push_back(parse_nonneg(s, ln, name));
  };
  if (n > 0) {
    read_weights(1, kp.weights1, "weights1");
    read_weights(2, kp.weights2, "weights2");
  }
  const auto& [cl, cap] = lines.back();
  if (cap.size() != 2) throw ParseError(cl, "capacities", "expected 'C1 C2'");
  kp.capacity1 = parse_nonneg(cap[0], cl, "capacities");
  kp.capacity2 = parse_nonneg(cap[1], cl, "capacities");
  return kp;
}

}  // namespace mkp
