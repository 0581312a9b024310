#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signut/classifier.hpp"
#include "signut/search.hpp"
#include "signut/signed_graph.hpp"

namespace signut::io {

/// Malformed input; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Standard graph6: short order form (n <= 62) and the 3-byte extended form
/// (n <= 258047). Signs of the result are all positive. An optional
/// ">>graph6<<" header is accepted; trailing whitespace is ignored.
SignedGraph parse_graph6(std::string_view line);

/// Canonical graph6 of the underlying graph. Throws std::domain_error for an
/// empty graph.
std::string emit_graph6(const SignedGraph& g);

/// Number of hex digits in the sign mask of a graph with m edges.
inline std::size_t mask_digits(std::size_t m) { return m == 0 ? 1 : (m + 3) / 4; }

/// Signed record "<graph6> <hexmask>": bit i of the mask (MSB first, across
/// the whole hex string) marks lexicographic edge i negative.
SignedGraph parse_signed(std::string_view line);
std::string emit_signed(const SignedGraph& g);
std::string emit_mask(const SignedGraph& g);

/// Splits a stream into non-empty lines (trailing '\r' removed).
std::vector<std::string> read_lines(std::istream& in);

/// Reads every graph6 line of a catalogue stream.
std::vector<SignedGraph> read_graph6_stream(std::istream& in);

/// JSON with stable key order and a "schema": 1 field.
std::string emit_report(const NutReport& r);
std::string emit_report(const NutReport& r, const SignedGraph& g);
std::string emit_report(const SearchOutcome& o);

/// One-line text form of a report.
std::string format_report_line(const SignedGraph& g, const NutReport& r);

/// Aligned text table of cell verdicts, rows by degree and columns by order.
std::string format_table(const std::vector<CellVerdict>& cells);

}  // namespace signut::io
