#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arrowknot/based.hpp"
#include "arrowknot/lincomb.hpp"

namespace arrowknot {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Line cursor over a text buffer. Line numbers are 1-based; blank lines and
/// lines starting with '#' are skipped.
class LineReader {
 public:
  explicit LineReader(std::string_view text);
  bool at_end();
  /// Next significant line; throws ParseError at end of input.
  std::string_view next(const char* expecting);
  std::string_view peek();
  int line() const noexcept { return line_; }

 private:
  void skip_blank();
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
  int pending_line_ = 0;
};

/// Splits "key=value key=value" into pairs; the first word may be a bare tag.
struct Fields {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> values;
  const std::string* find(std::string_view key) const;
  const std::string& require(std::string_view key, int line) const;
};
Fields split_fields(std::string_view line, int line_no, bool tagged);
Marking parse_marking(std::string_view s, int line_no);

template <Species S>
std::string format_diagram(const Diagram<S>& d);
std::string format_diagram(const BasedArrow& b);
std::string format_diagram(const DegenerateArrow& d);

template <Species S>
Diagram<S> read_diagram(LineReader& in);
BasedArrow read_based(LineReader& in);
DegenerateArrow read_degenerate(LineReader& in);

template <class Key>
Key read_block(LineReader& in);
template <>
GaussDiagram read_block<GaussDiagram>(LineReader& in);
template <>
ArrowDiagram read_block<ArrowDiagram>(LineReader& in);
template <>
BasedArrow read_block<BasedArrow>(LineReader& in);
template <>
DegenerateArrow read_block<DegenerateArrow>(LineReader& in);

GaussDiagram parse_gauss(std::string_view text);
ArrowDiagram parse_arrow(std::string_view text);

/// Terms in key order, each "coef=p/q" then the block, separated by "---".
template <class Key>
std::string format_lincomb(const LinComb<Key>& x) {
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) out += "---\n";
    first = false;
    out += "coef=" + to_fraction_string(c) + "\n";
    out += format_diagram(k);
  }
  return out;
}

/// Reads terms until end of input or a line equal to `stop`.
template <class Key>
LinComb<Key> read_lincomb(LineReader& in, std::string_view stop = {}) {
  LinComb<Key> out;
  while (!in.at_end() && (stop.empty() || in.peek() != stop)) {
    std::string_view line = in.next("coef line");
    const int line_no = in.line();
    if (!line.starts_with("coef=")) throw ParseError(line_no, "expected coef=<p>/<q>");
    Rational c;
    try {
      c = parse_rational(line.substr(5));
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    out.add(read_block<Key>(in), c);
    if (!in.at_end() && in.peek() == "---") in.next("separator");
  }
  return out;
}

template <class Key>
LinComb<Key> parse_lincomb(std::string_view text) {
  LineReader in(text);
  return read_lincomb<Key>(in);
}

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace arrowknot
