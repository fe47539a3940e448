// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "arrowknot/boundary.hpp"
#include "arrowknot/catalog.hpp"
#include "arrowknot/chain.hpp"
#include "arrowknot/checker.hpp"
#include "arrowknot/enumerate.hpp"
#include "arrowknot/evaluate.hpp"
#include "arrowknot/ratlinalg.hpp"
#include "arrowknot/relations.hpp"
#include "arrowknot/solver.hpp"
#include "arrowknot/text_io.hpp"
#include "arrowknot/walk.hpp"
#include "oracles.hpp"

using namespace arrowknot;

namespace {

// Time limits per criterion, seconds.
constexpr double kLimit1 = 60;
constexpr double kLimit3 = 300;
constexpr double kLimit6 = 600;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ArrowComb random_arrow_comb(std::mt19937_64& rng, int max_degree, Marking K, const std::vector<Marking>& marks) {
  ArrowComb a;
  const int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    a.add(forget_signs(random_gauss(uniform(rng, 0, max_degree), K, marks, rng)),
          Rational(Rational(uniform(rng, -6, 6)) / uniform(rng, 1, 4)));
  }
  return a;
}

Outcome bracket_identity() {
  std::mt19937_64 rng = stream_rng(2024, 1);
  const std::vector<Marking> marks{-2, -1, 0, 1, 2, 3};
  int pairs = 0;
  int nonzero = 0;
  for (; pairs < 1000; ++pairs) {
    const Marking K = uniform(rng, -2, 3);
    const ArrowDiagram a = forget_signs(random_gauss(uniform(rng, 0, 3), K, marks, rng));
    const GaussDiagram g = random_gauss(uniform(rng, 0, 4), K, marks, rng);
    const Rational lhs(double_angle(a, g));
    const Rational rhs = pair_norm(sign_expand_S(a), subdiagram_expand_I(g));
    if (lhs != rhs) return {false, "mismatch on " + describe(a) + " / " + describe(g)};
    nonzero += is_zero(lhs) ? 0 : 1;
  }
  const ArrowDiagram a(0, {{0, 1, 0, 1}, {2, 3, 0, 1}});
  const std::vector<int> signs{1, -1};
  const GaussDiagram g = with_signs(a, signs);
  const Integer paren = double_paren(a, g);
  const Rational ortho = pair_ortho(sign_expand_S(a), subdiagram_expand_I(g));
  std::ostringstream os;
  os << pairs << " pairs (" << nonzero << " nonzero); witness |Aut|=" << aut_order(a) << " ((A,G))=" << paren
     << " (S(A),I(G))=" << ortho;
  return {aut_order(a) == 2 && Rational(paren) != ortho && nonzero > 100, os.str()};
}

Outcome image_of_S() {
  std::mt19937_64 rng = stream_rng(2024, 2);
  const std::vector<Marking> marks{0, 1, 2};
  std::size_t pairings = 0;
  for (int t = 0; t < 200; ++t) {
    const ArrowComb a = random_arrow_comb(rng, 3, 2, marks);
    const GaussComb G = sign_expand_S(a);
    for (const auto& [x, c] : G) {
      for (const GaussComb& r : gauss_instances_containing(Family::P2h1, x)) {
        ++pairings;
        if (!is_zero(pair_norm(G, r))) return {false, "S(a) pairs nontrivially with " + format_lincomb(r)};
      }
    }
    ArrowComb back;
    for (const auto& [x, c] : G) {
      bool positive = true;
      for (const Arrow& ar : x.arrows()) positive = positive && ar.sign > 0;
      if (positive) back.add(forget_signs(x), c);
    }
    if (!(sign_expand_S(back) == G)) return {false, "reconstruction differs for " + format_lincomb(a)};
  }
  return {true, "200 combinations, " + std::to_string(pairings) + " P2h1 pairings zero, reconstruction exact"};
}

std::vector<SparseVec> arrow_rows(const std::vector<RelationInstance>& insts, DiagramIndexedMatrix<ArrowDiagram>& m) {
  std::vector<SparseVec> rows;
  for (const auto& i : insts) rows.push_back(m.coordinates(std::get<ArrowComb>(i.vector), true));
  return rows;
}

Outcome two_term_in_span() {
  const MarkingWindow w(3, {0, 1, 2, 3});
  const auto policy = WindowPolicy::Closed;
  DiagramIndexedMatrix<ArrowDiagram> m;
  auto six = gen_family(Family::A6T, 3, w, policy).instances;
  const auto bigon = gen_family(Family::AP2, 3, w, policy).instances;
  six.insert(six.end(), bigon.begin(), bigon.end());
  Echelon e;
  for (const SparseVec& r : arrow_rows(six, m)) e.insert(r);
  const auto two = gen_family(Family::A2T, 3, w, policy).instances;
  for (const auto& i : two) {
    if (!e.contains(m.coordinates(std::get<ArrowComb>(i.vector), true))) {
      return {false, "outside span: " + format_lincomb(std::get<ArrowComb>(i.vector))};
    }
  }
  return {!two.empty(), std::to_string(two.size()) + " A2T instances in span of " + std::to_string(six.size()) +
                            " A6T+AP2 rows (rank " + std::to_string(e.rank()) + "), K=3 window 0..3"};
}

Outcome kernel_equality() {
  const MarkingWindow w(5, {1, 2, 3, 4});
  const auto basis = solve_formula_space(2, w);
  const auto dker = solve_d_kernel(2, w);
  if (basis.size() != dker.size() || !same_span(basis, dker)) {
    return {false, "dimensions " + std::to_string(basis.size()) + " vs " + std::to_string(dker.size())};
  }
  std::mt19937_64 rng = stream_rng(2024, 4);
  const GaussDiagram start = random_gauss(3, 5, {1, 2, 3, 4}, rng);
  const VerifyReport r = verify_invariance(basis, start, 1000, 20, 4, WalkSampler{{0, 1, 2, 3, 4, 5}, 12}, threads());
  return {r.constant && !basis.empty(),
          "dim " + std::to_string(basis.size()) + " both ways; walks: " + r.summary()};
}

Outcome duality() {
  const MarkingWindow w(3, {0, 1, 2, 3});
  std::mt19937_64 rng = stream_rng(2024, 5);
  int pairs = 0;
  int nonzero = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto ds = enumerate_diagrams<Species::arrow>(n, w);
    std::vector<DegenerateArrow> mono;
    for (const auto& d : ds) {
      for (const auto& g : nice_degenerations(d)) {
        if (is_monotonic(g)) mono.push_back(g);
      }
    }
    for (int t = 0; t < 300; ++t, ++pairs) {
      const DegenerateArrow& d = mono[rng() % mono.size()];
      std::optional<BasedArrow> b;
      if (t % 2 == 0) {
        const BasedComb six = based_six_term(d);
        auto it = six.begin();
        std::advance(it, static_cast<long>(rng() % six.size()));
        b = it->first;
      } else {
        const ArrowDiagram& a = ds[rng() % ds.size()];
        b = BasedArrow(a, static_cast<int>(rng() % static_cast<unsigned>(a.endpoint_count())));
      }
      const auto [lhs, rhs] = based_6T_pairing_sides(*b, d);
      if (lhs != rhs) return {false, "mismatch at " + describe(*b) + " / " + describe(d)};
      nonzero += is_zero(lhs) ? 0 : 1;
    }
  }
  return {nonzero > 0, std::to_string(pairs) + " pairs at degrees 2-3, " + std::to_string(nonzero) + " nonzero"};
}

Outcome chain_formulas() {
  const std::vector<Marking> entries{-2, -1, 1, 2};
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<Marking> gamma(static_cast<std::size_t>(n + 1));
    std::function<std::optional<std::string>(std::size_t)> rec = [&](std::size_t i) -> std::optional<std::string> {
      if (i == gamma.size()) {
        ++checked;
        const CheckReport r = check_formula(gv_formula(n, gamma));
        if (!r.pass()) return r.summary();
        return std::nullopt;
      }
      for (Marking v : entries) {
        gamma[i] = v;
        if (auto bad = rec(i + 1)) return bad;
      }
      return std::nullopt;
    };
    if (auto bad = rec(0)) return {false, "n=" + std::to_string(n) + " failed: " + *bad};
  }
  const std::size_t u2 = enumerate_Un(2).size();
  return {u2 == 3, std::to_string(checked) + " formulas pass, |U_2|=" + std::to_string(u2)};
}

Outcome length_five() {
  const Marking K = 5;
  for (Marking a : {Marking{1}, Marking{2}, K}) {
    const CheckReport r = check_formula(length5_formula(K, a));
    if (!r.pass()) return {false, "a=" + std::to_string(a) + ": " + r.summary()};
  }
  const std::size_t terms = length5_formula(K, K).vector.size();
  const CheckReport c = check_formula(counterexample_formula(K, 2));
  const bool ok = terms == 3 && c.d_zero && !c.family(Family::AP2).pass();
  return {ok, "reconstructed L5 passes at K=5 for a=1,2,5 (" + std::to_string(terms) +
                  " terms at a=K); counterexample d=0, AP2 max=" + c.family(Family::AP2).max_abs.get_str()};
}

Outcome walks_substitute() {
  const Formula f = length5_formula(5, 2);
  std::mt19937_64 rng = stream_rng(2024, 8);
  const WalkSampler sampler{{0, 1, 2, 3, 4, 5}, 12};
  std::size_t steps = 0;
  for (int s = 0; s < 5; ++s) {
    const GaussDiagram start = random_gauss(4, 5, {0, 1, 2, 3, 4, 5}, rng);
    const VerifyReport r = verify_invariance({f}, start, 1000, 20, 80 + static_cast<std::uint64_t>(s), sampler, threads());
    if (!r.constant) return {false, "start " + std::to_string(s) + ": " + r.violation};
    steps += r.steps;
  }
  const Formula control = make_formula(ArrowComb(ArrowDiagram(5, {{1, 0, 0, 0}})), 5, Provenance::file);
  const VerifyReport neg = verify_invariance({control}, random_gauss(4, 5, {0, 1, 2, 3, 4, 5}, rng), 200, 20, 7,
                                             sampler, threads());
  return {!neg.constant, "substitute (knot family fixtures unavailable): 5x1000 walks, " + std::to_string(steps) +
                             " steps constant; negative control " + (neg.constant ? "missed" : "caught")};
}

Outcome polyak_span() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& w : {MarkingWindow(1, {0, 1}), MarkingWindow(2, {0, 1, 2})}) {
    const SpanCompatReport r = check_I_span_compat(3, w);
    ok = ok && r.pass() && r.r_instances > 0;
    os << "K=" << w.K() << ": " << r.r_instances << " R-relations, " << r.failures << " failures";
    if (!r.pass()) os << " (" << r.witness << ")";
    os << (w.K() == 1 ? "; " : "");
  }
  return {ok, os.str()};
}

Outcome infrastructure() {
  std::mt19937_64 rng = stream_rng(2024, 10);
  const std::vector<Marking> marks{-1, 0, 1, 2};
  for (int t = 0; t < 10000; ++t) {
    const GaussDiagram g = random_gauss(uniform(rng, 0, 5), 2, marks, rng);
    const CanonicalForm<Species::gauss> cf = canonical_form(g);
    const GaussDiagram r = g.rotated(uniform(rng, 0, 11));
    if (!canonicalize(cf.diagram).same_encoding(cf.diagram) || !canonicalize(r).same_encoding(cf.diagram) ||
        oracle::rotation_class({cf.diagram.arrows().begin(), cf.diagram.arrows().end()}) !=
            oracle::rotation_class({g.arrows().begin(), g.arrows().end()}) ||
        cf.aut != oracle::symmetry_count({g.arrows().begin(), g.arrows().end()})) {
      return {false, "canonical form disagrees on " + describe(g)};
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_matrix(uniform(rng, 1, 5), uniform(rng, 1, 5), rng);
    std::vector<SparseVec> rows;
    Echelon e;
    for (const auto& row : m) {
      rows.push_back(make_sparse(row));
      e.insert(rows.back());
    }
    const int cols = static_cast<int>(m[0].size());
    const auto ker = e.kernel_basis(cols);
    bool annihilates = true;
    for (const auto& k : ker) {
      for (const auto& r : rows) annihilates = annihilates && is_zero(dot(k, r));
    }
    if (rank(rows) != oracle::rank_by_minors(m) || static_cast<int>(ker.size()) + rank(rows) != cols || !annihilates) {
      return {false, "rank oracle disagrees"};
    }
  }
  std::vector<std::string> texts{format_formula(length5_formula(5, 2)), format_formula(counterexample_formula(3, 1)),
                                 format_basis(solve_formula_space(2, MarkingWindow(2, {0, 1, 2})), "round trip")};
  for (int t = 0; t < 50; ++t) texts.push_back(format_diagram(random_gauss(uniform(rng, 0, 5), 3, marks, rng)));
  for (std::size_t i = 0; i < texts.size(); ++i) {
    std::string again;
    if (i == 2) {
      again = format_basis(parse_basis(texts[i]), "round trip");
    } else if (i < 2) {
      again = format_formula(parse_formula(texts[i]));
    } else {
      again = format_diagram(parse_gauss(texts[i]));
    }
    if (again != texts[i]) return {false, "round trip changed text " + std::to_string(i)};
  }
  return {true, "10000 diagrams canonical, 200 matrices match the minor oracle, " + std::to_string(texts.size()) +
                    " files byte-identical"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::function<Outcome()> run;
    double limit;
  };
  const std::vector<Criterion> criteria{
      {1, bracket_identity, kLimit1}, {2, image_of_S, 0},   {3, two_term_in_span, kLimit3},
      {4, kernel_equality, 0},        {5, duality, 0},      {6, chain_formulas, kLimit6},
      {7, length_five, 0},            {8, walks_substitute, 0}, {9, polyak_span, 0},
      {10, infrastructure, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    std::printf("criterion %d: %s %s [%.1fs]\n", c.number, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
