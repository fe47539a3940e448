#include "arrowknot/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace arrowknot {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  const std::string num(s.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  auto valid = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = allow_sign && (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num, true) || !valid(den, false)) throw std::invalid_argument("bad rational '" + std::string(s) + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num);
  Integer q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

LineReader::LineReader(std::string_view text) : text_(text) {}

void LineReader::skip_blank() {
  while (pos_ < text_.size()) {
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    if (lead < line.size() && line[lead] != '#') return;
    pos_ = end + 1;
    ++pending_line_;
  }
}

bool LineReader::at_end() {
  skip_blank();
  return pos_ >= text_.size();
}

std::string_view LineReader::peek() {
  skip_blank();
  if (pos_ >= text_.size()) return {};
  std::size_t end = text_.find('\n', pos_);
  if (end == std::string_view::npos) end = text_.size();
  std::string_view line = text_.substr(pos_, end - pos_);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

std::string_view LineReader::next(const char* expecting) {
  if (at_end()) throw ParseError(line_ + pending_line_ + 1, std::string("unexpected end of input, expected ") + expecting);
  std::string_view line = peek();
  line_ += pending_line_ + 1;
  pending_line_ = 0;
  std::size_t end = text_.find('\n', pos_);
  pos_ = end == std::string_view::npos ? text_.size() : end + 1;
  return line;
}

const std::string* Fields::find(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string& Fields::require(std::string_view key, int line) const {
  const std::string* v = find(key);
  if (!v) throw ParseError(line, "missing field '" + std::string(key) + "'");
  return *v;
}

Fields split_fields(std::string_view line, int line_no, bool tagged) {
  Fields f;
  std::istringstream words{std::string(line)};
  std::string w;
  bool first = true;
  while (words >> w) {
    if (first && tagged) {
      f.tag = w;
      first = false;
      continue;
    }
    first = false;
    const auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "expected key=value, got '" + w + "'");
    std::string key = w.substr(0, eq);
    if (f.find(key)) throw ParseError(line_no, "repeated field '" + key + "'");
    f.values.emplace_back(std::move(key), w.substr(eq + 1));
  }
  return f;
}

Marking parse_marking(std::string_view s, int line_no) {
  Marking v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

namespace {

void check_known(const Fields& f, std::initializer_list<std::string_view> known, int line_no) {
  for (const auto& [k, v] : f.values) {
    bool ok = false;
    for (auto name : known) ok = ok || k == name;
    if (!ok) throw ParseError(line_no, "unknown field '" + k + "'");
  }
}

std::string arrow_lines(std::span<const Arrow> arrows, bool signed_arrows) {
  std::string out;
  for (const Arrow& a : arrows) {
    out += "tail=" + std::to_string(a.tail) + " head=" + std::to_string(a.head);
    if (signed_arrows) out += a.sign > 0 ? " sign=+" : " sign=-";
    out += " mark=" + std::to_string(a.mark) + "\n";
  }
  return out;
}

struct Header {
  Fields fields;
  Marking K = 0;
  int n = 0;
  int line = 0;
};

Header read_header(LineReader& in, std::string_view tag, std::initializer_list<std::string_view> extra) {
  Header h;
  std::string_view line = in.next("diagram header");
  h.line = in.line();
  h.fields = split_fields(line, h.line, true);
  if (h.fields.tag != tag) {
    throw ParseError(h.line, "expected '" + std::string(tag) + "' header, got '" + h.fields.tag + "'");
  }
  std::vector<std::string_view> known{"K", "n"};
  known.insert(known.end(), extra.begin(), extra.end());
  for (const auto& [k, v] : h.fields.values) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw ParseError(h.line, "unknown field '" + k + "'");
  }
  h.K = parse_marking(h.fields.require("K", h.line), h.line);
  const Marking n = parse_marking(h.fields.require("n", h.line), h.line);
  if (n < 0 || n > 64) throw ParseError(h.line, "degree out of range");
  h.n = static_cast<int>(n);
  return h;
}

std::vector<Arrow> read_arrows(LineReader& in, int n, bool signed_arrows) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) {
    std::string_view line = in.next("arrow line");
    const int line_no = in.line();
    Fields f = split_fields(line, line_no, false);
    if (signed_arrows) {
      check_known(f, {"tail", "head", "sign", "mark"}, line_no);
    } else {
      check_known(f, {"tail", "head", "mark"}, line_no);
    }
    Arrow a;
    a.tail = static_cast<int>(parse_marking(f.require("tail", line_no), line_no));
    a.head = static_cast<int>(parse_marking(f.require("head", line_no), line_no));
    a.mark = parse_marking(f.require("mark", line_no), line_no);
    if (signed_arrows) {
      const std::string& s = f.require("sign", line_no);
      if (s == "+") {
        a.sign = 1;
      } else if (s == "-") {
        a.sign = -1;
      } else {
        throw ParseError(line_no, "sign must be + or -");
      }
    }
    arrows.push_back(a);
  }
  return arrows;
}

template <class Build>
auto validated(int line, Build build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

template <Species S>
std::string format_diagram(const Diagram<S>& d) {
  std::string out = S == Species::gauss ? "gauss" : "arrow";
  out += " K=" + std::to_string(d.K()) + " n=" + std::to_string(d.degree()) + "\n";
  return out + arrow_lines(d.arrows(), S == Species::gauss);
}

std::string format_diagram(const BasedArrow& b) {
  const auto& d = b.framed();
  return "based K=" + std::to_string(d.K()) + " n=" + std::to_string(d.degree()) +
         " base=" + std::to_string(d.endpoint_count() - 1) + "\n" + arrow_lines(d.arrows(), false);
}

std::string format_diagram(const DegenerateArrow& x) {
  const auto& d = x.framed();
  return "degenerate K=" + std::to_string(d.K()) + " n=" + std::to_string(d.degree()) +
         " fused=" + std::to_string(d.endpoint_count() - 1) + ",0\n" + arrow_lines(d.arrows(), false);
}

template <Species S>
Diagram<S> read_diagram(LineReader& in) {
  Header h = read_header(in, S == Species::gauss ? "gauss" : "arrow", {});
  std::vector<Arrow> arrows = read_arrows(in, h.n, S == Species::gauss);
  return validated(h.line, [&] { return Diagram<S>(h.K, std::move(arrows)); });
}

BasedArrow read_based(LineReader& in) {
  Header h = read_header(in, "based", {"base"});
  const Marking base = parse_marking(h.fields.require("base", h.line), h.line);
  std::vector<Arrow> arrows = read_arrows(in, h.n, false);
  return validated(h.line, [&] { return BasedArrow(ArrowDiagram(h.K, std::move(arrows)), static_cast<int>(base)); });
}

DegenerateArrow read_degenerate(LineReader& in) {
  Header h = read_header(in, "degenerate", {"fused"});
  const std::string& fused = h.fields.require("fused", h.line);
  const auto comma = fused.find(',');
  if (comma == std::string::npos) throw ParseError(h.line, "fused needs two positions i,j");
  const Marking i = parse_marking(std::string_view(fused).substr(0, comma), h.line);
  const Marking j = parse_marking(std::string_view(fused).substr(comma + 1), h.line);
  std::vector<Arrow> arrows = read_arrows(in, h.n, false);
  if (2 * h.n == 0 || (i + 1) % (2 * h.n) != j) throw ParseError(h.line, "fused positions must be consecutive");
  return validated(h.line, [&] { return DegenerateArrow(ArrowDiagram(h.K, std::move(arrows)), static_cast<int>(i)); });
}

template <>
GaussDiagram read_block<GaussDiagram>(LineReader& in) {
  return read_diagram<Species::gauss>(in);
}
template <>
ArrowDiagram read_block<ArrowDiagram>(LineReader& in) {
  return read_diagram<Species::arrow>(in);
}
template <>
BasedArrow read_block<BasedArrow>(LineReader& in) {
  return read_based(in);
}
template <>
DegenerateArrow read_block<DegenerateArrow>(LineReader& in) {
  return read_degenerate(in);
}

GaussDiagram parse_gauss(std::string_view text) {
  LineReader in(text);
  GaussDiagram d = read_diagram<Species::gauss>(in);
  if (!in.at_end()) throw ParseError(in.line() + 1, "trailing content after diagram");
  return d;
}

ArrowDiagram parse_arrow(std::string_view text) {
  LineReader in(text);
  ArrowDiagram d = read_diagram<Species::arrow>(in);
  if (!in.at_end()) throw ParseError(in.line() + 1, "trailing content after diagram");
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << contents;
}

template std::string format_diagram(const Diagram<Species::gauss>&);
template std::string format_diagram(const Diagram<Species::arrow>&);
template Diagram<Species::gauss> read_diagram(LineReader&);
template Diagram<Species::arrow> read_diagram(LineReader&);

}  // namespace arrowknot
