#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "arrowknot/boundary.hpp"
#include "arrowknot/chain.hpp"
#include "arrowknot/checker.hpp"
#include "arrowknot/enumerate.hpp"
#include "arrowknot/evaluate.hpp"
#include "arrowknot/solver.hpp"
#include "arrowknot/text_io.hpp"
#include "arrowknot/walk.hpp"

using namespace arrowknot;

namespace {

struct Globals {
  std::optional<Marking> K;
  std::string markings;
  std::uint64_t seed = 1;
  int threads = 1;
  std::optional<std::string> cache_dir;
};

MarkingWindow window_from(const Globals& g) {
  if (!g.K) throw CLI::ValidationError("--K", "this command needs --K");
  if (g.markings.empty()) throw CLI::ValidationError("--markings", "this command needs --markings");
  return MarkingWindow::parse(*g.K, g.markings);
}

std::optional<MarkingWindow> optional_window(const Globals& g) {
  if (!g.K || g.markings.empty()) return std::nullopt;
  return MarkingWindow::parse(*g.K, g.markings);
}

std::vector<Formula> load_formulas(const std::string& path) {
  try {
    return parse_basis(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

GaussDiagram load_knot(const std::string& path) {
  try {
    return canonicalize(parse_gauss(read_file(path)));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::vector<Marking> parse_list(const std::string& s) {
  std::vector<Marking> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_marking(item, 0));
  return out;
}

int cmd_enumerate(const Globals& g, int degree, const std::string& species) {
  const MarkingWindow w = window_from(g);
  std::size_t count = 0;
  auto list = [&](const auto& diagrams) {
    for (const auto& d : diagrams) {
      std::cout << "# aut=" << aut_order(d) << "\n" << format_diagram(d);
      ++count;
    }
  };
  if (species == "gauss") {
    list(enumerate_diagrams<Species::gauss>(degree, w));
  } else {
    list(enumerate_diagrams<Species::arrow>(degree, w));
  }
  std::cout << "# count=" << count << "\n";
  return 0;
}

int cmd_solve(const Globals& g, int degree, const std::string& policy, const std::string& out) {
  const MarkingWindow w = window_from(g);
  SolveOptions opts;
  opts.cache_dir = resolve_cache_dir(g.cache_dir);
  opts.policy = policy == "closed" ? WindowPolicy::Closed : WindowPolicy::Restricted;
  const auto basis = solve_formula_space(degree, w, opts);
  emit(format_basis(basis, "degree=" + std::to_string(degree) + " " + w.to_string()), out);
  if (!out.empty()) std::cout << "dimension=" << basis.size() << "\n";
  return 0;
}

int cmd_check(const Globals& g, const std::string& path) {
  const auto formulas = load_formulas(path);
  const auto window = optional_window(g);
  bool ok = true;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const CheckReport r = check_formula(formulas[i], window);
    std::cout << "formula " << i << "\n" << r.summary();
    for (const FamilyCheck& fc : r.families) {
      if (!fc.pass()) std::cout << "first failing " << family_name(fc.family) << " instance:\n" << fc.first_failure;
    }
    ok = ok && r.pass();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_boundary(const Globals& g, const std::string& path) {
  const auto formulas = load_formulas(path);
  const auto window = optional_window(g);
  bool all_zero = true;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (i) std::cout << "===\n";
    const DegenerateComb d = boundary_d(formulas[i].vector, window);
    std::cout << format_lincomb(d) << "zero=" << (d.is_zero() ? "true" : "false") << "\n";
    all_zero = all_zero && d.is_zero();
  }
  return all_zero ? 0 : 1;
}

int cmd_eval(const std::string& formula_path, const std::string& knot_path) {
  const auto formulas = load_formulas(formula_path);
  const GaussDiagram knot = load_knot(knot_path);
  for (const Formula& f : formulas) std::cout << to_fraction_string(evaluate(f, knot)) << "\n";
  return 0;
}

int cmd_verify(const Globals& g, const std::string& formula_path, const std::string& knot_path, int start_degree,
               int trials, int length, const std::string& marks, int max_degree) {
  const auto formulas = load_formulas(formula_path);
  if (formulas.empty()) throw std::runtime_error("no formula in " + formula_path);
  const Marking K = formulas.front().K;
  WalkSampler sampler;
  sampler.max_degree = max_degree;
  const std::string& mark_text = !marks.empty() ? marks : g.markings;
  if (!mark_text.empty()) sampler.r2_marks = MarkingWindow::parse(K, mark_text).allowed();
  if (sampler.r2_marks.empty()) {
    for (const Formula& f : formulas) {
      for (const auto& [d, c] : f.vector) {
        for (const Arrow& a : d.arrows()) sampler.r2_marks.push_back(a.mark);
      }
    }
  }
  GaussDiagram start;
  if (!knot_path.empty()) {
    start = load_knot(knot_path);
  } else {
    std::mt19937_64 rng = stream_rng(g.seed, ~0ULL);
    start = random_gauss(start_degree, K, sampler.r2_marks, rng);
  }
  const VerifyReport r = verify_invariance(formulas, start, trials, length, g.seed, sampler, g.threads);
  std::cout << "start " << describe(start) << "\n" << r.summary() << "\n";
  return r.constant ? 0 : 1;
}

int cmd_gv(int degree, const std::string& gamma, const std::string& out) {
  const Formula f = gv_formula(degree, parse_list(gamma));
  emit(format_formula(f), out);
  const CheckReport r = check_formula(f);
  std::cerr << r.summary() << (r.pass() ? "PASS" : "FAIL") << "\n";
  return r.pass() ? 0 : 1;
}

int cmd_selftest(const Globals& g) {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  std::mt19937_64 rng = stream_rng(g.seed, 0);
  bool brackets = true;
  for (int t = 0; t < 200 && brackets; ++t) {
    const int n = std::uniform_int_distribution<int>(0, 2)(rng);
    const int m = std::uniform_int_distribution<int>(n, 4)(rng);
    const std::vector<Marking> marks{-1, 0, 1, 2};
    const ArrowDiagram a = forget_signs(random_gauss(n, 2, marks, rng));
    const GaussDiagram x = random_gauss(m, 2, marks, rng);
    brackets = evaluate(Formula{ArrowComb(a), 2, Provenance::file}, x) ==
               evaluate_naive(Formula{ArrowComb(a), 2, Provenance::file}, x);
  }
  report("bracket identity on 200 random pairs", brackets);
  const MarkingWindow w(3, {0, 1, 2, 3});
  bool duality = true;
  for (const ArrowDiagram& a : enumerate_diagrams<Species::arrow>(2, w)) {
    for (const DegenerateArrow& d : nice_degenerations(a)) {
      if (!d.is_monotonic()) continue;
      for (int arc = 0; arc < a.endpoint_count(); ++arc) duality = duality && based_6T_pairing_check(BasedArrow(a, arc), d);
    }
  }
  report("duality (d(B), D) = (B, A6T(D)) at degree 2", duality);
  report("gv_formula(2, (1,1,-2)) passes check", check_formula(gv_formula(2, {1, 1, -2})).pass());
  report("degree-2 kernels agree over K=5, markings 1..4",
         same_span(solve_formula_space(2, MarkingWindow(5, {1, 2, 3, 4})), solve_d_kernel(2, MarkingWindow(5, {1, 2, 3, 4}))));
  report("U_2 has 3 chain presentations", enumerate_Un(2).size() == 3);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow diagram formulas for virtual knots in thickened surfaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--K", g.K, "global marking (homology class of the knot)");
  app.add_option("--markings", g.markings, "marking window: lo..hi or a,b,c");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "solver cache directory (default: $ARROWKNOT_CACHE_DIR)");

  int degree = 2;
  std::string species = "arrow";
  std::string policy = "restricted";
  std::string out;
  std::string formula_path;
  std::string knot_path;
  std::string gamma;
  std::string marks;
  int trials = 100;
  int length = 20;
  int start_degree = 3;
  int max_degree = 12;

  auto* enumerate = app.add_subcommand("enumerate", "list canonical diagrams with their automorphism orders");
  enumerate->add_option("--degree", degree)->required();
  enumerate->add_option("--species", species)->check(CLI::IsMember({"arrow", "gauss"}))->capture_default_str();

  auto* solve = app.add_subcommand("solve", "basis of the degree-n formulas supported in the window");
  solve->add_option("--degree", degree)->required();
  solve->add_option("--policy", policy)->check(CLI::IsMember({"restricted", "closed"}))->capture_default_str();
  solve->add_option("--out", out, "basis file (default: stdout)");

  auto* check = app.add_subcommand("check", "pair a formula with AP1, AP2 and A6T and compute d");
  check->add_option("formula", formula_path)->required()->check(CLI::ExistingFile);

  auto* boundary = app.add_subcommand("boundary", "boundary of a formula in the monotonic basis");
  boundary->add_option("formula", formula_path)->required()->check(CLI::ExistingFile);

  auto* eval = app.add_subcommand("eval", "value of a formula on a Gauss diagram");
  eval->add_option("formula", formula_path)->required()->check(CLI::ExistingFile);
  eval->add_option("knot", knot_path)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "random Reidemeister walks keeping the formula constant");
  verify->add_option("formula", formula_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--knot", knot_path, "starting Gauss diagram (default: random)")->check(CLI::ExistingFile);
  verify->add_option("--start-degree", start_degree)->capture_default_str();
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--length", length)->capture_default_str();
  verify->add_option("--r2-marks", marks, "markings for untargeted R2 insertions (default: --markings)");
  verify->add_option("--max-degree", max_degree)->capture_default_str();

  auto* gv = app.add_subcommand("gv", "Grishanov-Vassiliev planar chain formula");
  gv->add_option("--degree", degree)->required();
  gv->add_option("--gamma", gamma, "comma separated nonzero classes, degree+1 of them")->required();
  gv->add_option("--out", out, "formula file (default: stdout)");

  auto* selftest = app.add_subcommand("selftest", "quick consistency checks");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(g, degree, species);
    if (*solve) return cmd_solve(g, degree, policy, out);
    if (*check) return cmd_check(g, formula_path);
    if (*boundary) return cmd_boundary(g, formula_path);
    if (*eval) return cmd_eval(formula_path, knot_path);
    if (*verify) return cmd_verify(g, formula_path, knot_path, start_degree, trials, length, marks, max_degree);
    if (*gv) return cmd_gv(degree, gamma, out);
    if (*selftest) return cmd_selftest(g);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
