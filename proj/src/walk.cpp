#include "arrowknot/walk.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "arrowknot/evaluate.hpp"

namespace arrowknot {

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(int lo, int hi, std::mt19937_64& rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Move random_r1(const GaussDiagram& g, std::mt19937_64& rng) {
  Move m;
  m.kind = MoveKind::R1Add;
  m.site.gap = uniform(0, std::max(g.endpoint_count(), 1) - 1, rng);
  m.params.sign = uniform(0, 1, rng) ? 1 : -1;
  m.params.tail_first = uniform(0, 1, rng) == 1;
  m.params.mark = m.params.tail_first ? g.K() : 0;
  return m;
}

Move random_r2(const GaussDiagram& g, std::mt19937_64& rng, const WalkSampler& sampler) {
  Move m;
  m.kind = MoveKind::R2Add;
  const int gaps = std::max(g.endpoint_count(), 1);
  m.params.sign = uniform(0, 1, rng) ? 1 : -1;
  m.params.tail_order = uniform(0, 1, rng) ? 1 : -1;
  m.params.head_order = uniform(0, 1, rng) ? 1 : -1;
  m.params.heads_first = uniform(0, 1, rng) == 1;
  const bool targeted = g.degree() >= 2 && (sampler.r2_marks.empty() || uniform(0, 1, rng) == 1);
  if (targeted) {
    const int e = uniform(0, g.degree() - 1, rng);
    int f = uniform(0, g.degree() - 2, rng);
    if (f >= e) ++f;
    const Arrow& ae = g.arrow(e);
    const Arrow& af = g.arrow(f);
    const int pe = uniform(0, 1, rng) ? ae.tail : ae.head;
    const int pf = uniform(0, 1, rng) ? af.tail : af.head;
    // A gap next to a position: right before it or right after it.
    auto near = [&](int p) { return uniform(0, 1, rng) ? p : prev_pos(p, g.endpoint_count()); };
    m.site.gap = near(pe);
    m.site.gap2 = near(pf);
    const Marking c = uniform(-1, 1, rng);
    m.params.mark = ae.mark + (uniform(0, 1, rng) ? af.mark : -af.mark) + c * g.K();
  } else {
    m.site.gap = uniform(0, gaps - 1, rng);
    m.site.gap2 = uniform(0, gaps - 1, rng);
    m.params.mark = pick(sampler.r2_marks, rng);
  }
  return m;
}

}  // namespace

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::optional<Move> random_move(const GaussDiagram& g, std::mt19937_64& rng, const WalkSampler& sampler) {
  std::vector<MoveKind> kinds;
  const std::vector<Move> r1 = removal_sites(g, MoveKind::R1Remove);
  const std::vector<Move> r2 = removal_sites(g, MoveKind::R2Remove);
  const std::vector<Move> r3 = r3_sites(g);
  if (g.degree() + 1 <= sampler.max_degree) kinds.push_back(MoveKind::R1Add);
  if (!r1.empty()) kinds.push_back(MoveKind::R1Remove);
  if (g.degree() + 2 <= sampler.max_degree && (g.degree() >= 2 || !sampler.r2_marks.empty())) {
    kinds.push_back(MoveKind::R2Add);
  }
  if (!r2.empty()) kinds.push_back(MoveKind::R2Remove);
  if (!r3.empty()) kinds.push_back(MoveKind::R3);
  if (kinds.empty()) return std::nullopt;
  switch (pick(kinds, rng)) {
    case MoveKind::R1Add:
      return random_r1(g, rng);
    case MoveKind::R1Remove:
      return pick(r1, rng);
    case MoveKind::R2Add:
      return random_r2(g, rng, sampler);
    case MoveKind::R2Remove:
      return pick(r2, rng);
    case MoveKind::R3:
      return pick(r3, rng);
  }
  return std::nullopt;
}

GaussDiagram random_gauss(int n, Marking K, const std::vector<Marking>& marks, std::mt19937_64& rng) {
  std::vector<int> pos(static_cast<std::size_t>(2 * n));
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) {
    Arrow a;
    a.tail = pos[static_cast<std::size_t>(2 * i)];
    a.head = pos[static_cast<std::size_t>(2 * i + 1)];
    a.sign = uniform(0, 1, rng) ? 1 : -1;
    a.mark = marks.empty() ? 0 : pick(marks, rng);
    arrows.push_back(a);
  }
  return canonicalize(GaussDiagram(K, std::move(arrows)));
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "trials=" << trials << " steps=" << steps;
  for (int k = 0; k < 5; ++k) os << " " << move_name(static_cast<MoveKind>(k)) << "=" << per_kind[static_cast<std::size_t>(k)];
  os << " stuck=" << stuck << " constant=" << (constant ? "true" : "false");
  if (!violation.empty()) os << "\nviolation: " << violation;
  return os.str();
}

VerifyReport verify_invariance(const std::vector<Formula>& formulas, const GaussDiagram& g0, int trials,
                               int walk_length, std::uint64_t seed, const WalkSampler& sampler, int threads) {
  std::vector<Rational> start;
  for (const Formula& f : formulas) start.push_back(evaluate(f, g0));

  struct TrialResult {
    std::size_t steps = 0;
    std::array<std::size_t, 5> per_kind{};
    bool stuck = false;
    std::string violation;
  };
  std::vector<TrialResult> results(static_cast<std::size_t>(std::max(trials, 0)));

  auto run = [&](int t) {
    TrialResult& r = results[static_cast<std::size_t>(t)];
    std::mt19937_64 rng = stream_rng(seed, static_cast<std::uint64_t>(t));
    GaussDiagram g = g0;
    for (int step = 0; step < walk_length; ++step) {
      std::optional<Move> m = random_move(g, rng, sampler);
      if (!m) {
        r.stuck = true;
        return;
      }
      GaussDiagram next = apply_R_move(g, *m);
      ++r.steps;
      ++r.per_kind[static_cast<std::size_t>(m->kind)];
      for (std::size_t i = 0; i < formulas.size(); ++i) {
        const Rational v = evaluate(formulas[i], next);
        if (v != start[i]) {
          std::ostringstream os;
          os << "trial " << t << " step " << step << " formula " << i << ": " << describe(*m) << " on " << describe(g)
             << " changed " << to_fraction_string(start[i]) << " -> " << to_fraction_string(v);
          r.violation = os.str();
          return;
        }
      }
      g = std::move(next);
    }
  };

  const int workers = std::max(1, std::min(threads, trials));
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int t = w; t < trials; t += workers) run(t);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  VerifyReport report;
  report.trials = results.size();
  for (const TrialResult& r : results) {
    report.steps += r.steps;
    for (std::size_t k = 0; k < 5; ++k) report.per_kind[k] += r.per_kind[k];
    report.stuck += r.stuck ? 1 : 0;
    if (!r.violation.empty() && report.constant) {
      report.constant = false;
      report.violation = r.violation;
    }
  }
  return report;
}

}  // namespace arrowknot
