#include "arrowknot/formula.hpp"

#include <stdexcept>

#include "arrowknot/text_io.hpp"

namespace arrowknot {

namespace {

Formula read_formula(LineReader& in) {
  const std::string_view header = in.next("formula header");
  const int line = in.line();
  const Fields f = split_fields(header, line, true);
  if (f.tag != "formula") throw ParseError(line, "expected 'formula K=<int>'");
  Formula out;
  out.K = parse_marking(f.require("K", line), line);
  out.provenance = Provenance::file;
  if (const std::string* p = f.find("provenance")) {
    if (*p == "solver") {
      out.provenance = Provenance::solver;
    } else if (*p == "gv") {
      out.provenance = Provenance::gv;
    } else if (*p != "file") {
      throw ParseError(line, "unknown provenance '" + *p + "'");
    }
  }
  for (const auto& [key, value] : f.values) {
    if (key != "K" && key != "provenance") throw ParseError(line, "unknown field '" + key + "'");
  }
  out.vector = read_lincomb<ArrowDiagram>(in, "===");
  for (const auto& [d, c] : out.vector) {
    if (d.K() != out.K) throw ParseError(line, "term with K=" + std::to_string(d.K()) + " in a formula with K=" + std::to_string(out.K));
  }
  return out;
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::solver:
      return "solver";
    case Provenance::gv:
      return "gv";
    case Provenance::file:
      return "file";
  }
  return "?";
}

std::set<int> Formula::degrees() const {
  std::set<int> out;
  for (const auto& [d, c] : vector) out.insert(d.degree());
  return out;
}

Formula make_formula(ArrowComb v, Marking K, Provenance p) {
  for (const auto& [d, c] : v) {
    if (d.K() != K) throw std::invalid_argument("formula term has K=" + std::to_string(d.K()) + ", expected " + std::to_string(K));
  }
  return Formula{std::move(v), K, p};
}

std::string format_formula(const Formula& f) {
  return "formula K=" + std::to_string(f.K) + " provenance=" + provenance_name(f.provenance) + "\n" +
         format_lincomb(f.vector);
}

Formula parse_formula(std::string_view text) {
  LineReader in(text);
  Formula f = read_formula(in);
  if (!in.at_end()) throw ParseError(in.line() + 1, "trailing content after formula");
  return f;
}

std::string format_basis(const std::vector<Formula>& basis, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += "# dimension=" + std::to_string(basis.size()) + "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += "===\n";
    out += format_formula(basis[i]);
  }
  return out;
}

std::vector<Formula> parse_basis(std::string_view text) {
  LineReader in(text);
  std::vector<Formula> out;
  while (!in.at_end()) {
    out.push_back(read_formula(in));
    if (!in.at_end()) in.next("===");
  }
  return out;
}

std::vector<Formula> homogeneous_components(const Formula& f) {
  std::vector<Formula> out;
  for (int n : f.degrees()) out.push_back(Formula{project_pi(f.vector, n), f.K, f.provenance});
  return out;
}

}  // namespace arrowknot
