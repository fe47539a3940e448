#include "arrowknot/solver.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>

#include "arrowknot/boundary.hpp"
#include "arrowknot/enumerate.hpp"
#include "arrowknot/templates.hpp"
#include "arrowknot/text_io.hpp"

namespace arrowknot {

namespace {

Rational aut_weight(const ArrowDiagram& d) { return Rational(aut_order(d)); }

DiagramIndexedMatrix<ArrowDiagram> columns_for(int n, const MarkingWindow& window, std::size_t max_columns) {
  const double estimate = estimate_columns(n, window);
  if (estimate > static_cast<double>(max_columns)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "degree %d over %zu markings needs about %.0f basis diagrams (limit %zu)", n,
                  window.allowed().size(), estimate, max_columns);
    throw SolverTooLarge(buf);
  }
  return DiagramIndexedMatrix<ArrowDiagram>(enumerate_diagrams<Species::arrow>(n, window));
}

void add_family_rows(ConstraintSystem& sys, Family f, int n, const MarkingWindow& window, WindowPolicy policy,
                     std::size_t& count) {
  for (const auto& inst : gen_family(f, n, window, policy).instances) {
    SparseVec row = sys.matrix.coordinates(std::get<ArrowComb>(inst.vector), aut_weight, false);
    if (row.empty()) continue;
    sys.matrix.add_row(std::move(row));
    ++count;
  }
}

std::vector<Formula> to_formulas(const DiagramIndexedMatrix<ArrowDiagram>& m, const std::vector<SparseVec>& basis,
                                 Marking K, Provenance p) {
  std::vector<Formula> out;
  for (const SparseVec& v : basis) out.push_back(Formula{m.to_lincomb(v), K, p});
  return out;
}

// AP1 and AP2 rows are single diagrams: the formula may not use them at all.
void add_unit_rows(DiagramIndexedMatrix<ArrowDiagram>& m) {
  const int cols = m.column_count();
  for (int c = 0; c < cols; ++c) {
    const ArrowDiagram& d = m.columns()[static_cast<std::size_t>(c)];
    if (!find_kinks(d).empty() || !find_bigons(d).empty()) m.add_row(SparseVec{{c, Rational(1)}});
  }
}

void add_boundary_rows(DiagramIndexedMatrix<ArrowDiagram>& m) {
  std::map<DegenerateArrow, SparseVec, EncodingLess> rows;
  const int cols = m.column_count();
  for (int c = 0; c < cols; ++c) {
    for (const auto& [dd, coef] : boundary_d(m.columns()[static_cast<std::size_t>(c)])) rows[dd].emplace_back(c, coef);
  }
  for (auto& [dd, row] : rows) m.add_row(std::move(row));
}

std::vector<SparseVec> rows_of(const std::vector<Formula>& fs, DiagramIndexedMatrix<ArrowDiagram>& m) {
  std::vector<SparseVec> out;
  for (const Formula& f : fs) out.push_back(m.coordinates(f.vector, true));
  return out;
}

}  // namespace

double estimate_columns(int n, const MarkingWindow& window) {
  double shapes = 1;
  for (int k = 1; k <= n; ++k) shapes *= 2.0 * (2 * k - 1);
  if (n > 0) shapes /= 2.0 * n;
  return std::max(1.0, shapes) * std::pow(static_cast<double>(window.allowed().size()), n);
}

ConstraintSystem build_constraints(int n, const MarkingWindow& window, WindowPolicy policy, std::size_t max_columns) {
  ConstraintSystem sys;
  sys.matrix = columns_for(n, window, max_columns);
  add_family_rows(sys, Family::AP1, n, window, policy, sys.ap1);
  add_family_rows(sys, Family::AP2, n, window, policy, sys.ap2);
  add_family_rows(sys, Family::A6T, n, window, policy, sys.a6t);
  return sys;
}

std::vector<Formula> solve_formula_space(int n, const MarkingWindow& window, const SolveOptions& opts) {
  if (window.empty()) throw std::invalid_argument("empty marking window");
  std::string path;
  if (opts.cache_dir) {
    path = solve_cache_path(*opts.cache_dir, n, window, opts.policy);
    if (std::filesystem::exists(path)) return parse_basis(read_file(path));
  }
  const ConstraintSystem sys = build_constraints(n, window, opts.policy, opts.max_columns);
  auto basis = to_formulas(sys.matrix, kernel(sys.matrix), window.K(), Provenance::solver);
  if (!path.empty()) {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    write_file(path, format_basis(basis, "degree=" + std::to_string(n) + " " + window.to_string()));
  }
  return basis;
}

std::vector<Formula> solve_d_kernel(int n, const MarkingWindow& window) {
  auto m = columns_for(n, window, SIZE_MAX);
  add_unit_rows(m);
  add_boundary_rows(m);
  return to_formulas(m, kernel(m), window.K(), Provenance::solver);
}

std::vector<Formula> solve_d_only(int n, const MarkingWindow& window) {
  auto m = columns_for(n, window, SIZE_MAX);
  add_boundary_rows(m);
  return to_formulas(m, kernel(m), window.K(), Provenance::solver);
}

bool same_span(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  DiagramIndexedMatrix<ArrowDiagram> m;
  const auto ra = rows_of(a, m);
  const auto rb = rows_of(b, m);
  if (rank(ra) != rank(rb)) return false;
  for (const SparseVec& v : ra) {
    if (!in_span(v, rb)) return false;
  }
  for (const SparseVec& v : rb) {
    if (!in_span(v, ra)) return false;
  }
  return true;
}

bool in_formula_span(const Formula& f, const std::vector<Formula>& basis) {
  DiagramIndexedMatrix<ArrowDiagram> m;
  const auto rows = rows_of(basis, m);
  return in_span(m.coordinates(f.vector, true), rows);
}

std::uint64_t solve_cache_hash(int n, const MarkingWindow& window, WindowPolicy policy) {
  const std::string key = std::to_string(n) + "|" + window.to_string() + "|" +
                          (policy == WindowPolicy::Closed ? "closed" : "restricted") + "|" +
                          std::to_string(template_hash());
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string solve_cache_path(const std::string& dir, int n, const MarkingWindow& window, WindowPolicy policy) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(solve_cache_hash(n, window, policy)));
  return (std::filesystem::path(dir) / std::to_string(window.K()) / std::to_string(n) / (std::string(hex) + ".basis"))
      .string();
}

std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("ARROWKNOT_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

}  // namespace arrowknot
