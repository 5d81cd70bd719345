#pragma once

// Text formats. All documents share one line-oriented layout:
//
//   <kind> <version>          first significant line, e.g. "mkp-instance 1"
//   <key> <value>...          scalar or vector field
//   <key>                     matrix field; its rows follow on lines that
//     <v> <v> ...             start with whitespace
//   end                       mandatory terminator
//
// '#' starts a comment; blank lines are ignored. See docs/formats.md.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mkp/core.hpp"
#include "mkp/reductions.hpp"

namespace mkp {

struct Field {
  std::string key;
  std::vector<std::string> values;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;
  std::size_t line = 0;
};

struct Document {
  std::string kind;
  std::string version;
  std::vector<Field> fields;

  /// First field with this key, or nullptr.
  const Field* find(std::string_view key) const;
};

/// Throws ParseError with the offending line.
Document parse_document(std::istream& in);

Instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

/// Accepts "mkp-schedule" documents and "mkp-result" documents (which
/// embed a schedule block).
Schedule read_schedule(std::istream& in);
void write_schedule(std::ostream& out, const Schedule& sched);

/// Emits the "schedule" block (T rows of 0/1) used by schedule and result
/// documents.
void write_schedule_block(std::ostream& out, const Schedule& sched);

/// Edge list: first line "n m", then m lines "u v" (1-based vertices).
Graph read_graph(std::istream& in);

/// Four lines: "n", the n weights of the first constraint, the n weights
/// of the second, then "C1 C2".
TwoKpInstance read_two_kp(std::istream& in);

}  // namespace mkp
