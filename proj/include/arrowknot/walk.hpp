#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arrowknot/formula.hpp"
#include "arrowknot/rmoves.hpp"

namespace arrowknot {

/// Move sampler. A move kind is drawn uniformly among those applicable, then
/// a site and parameters uniformly. Half of the R2 insertions are targeted:
/// the new pair goes next to endpoints of two existing arrows e, f with a
/// marking from {m_e ± m_f + cK : c = -1, 0, 1}, which is what creates R3
/// sites; the other half use a marking from `r2_marks`.
struct WalkSampler {
  std::vector<Marking> r2_marks;
  int max_degree = 12;
};

/// Random applicable move, or nullopt when none exists.
std::optional<Move> random_move(const GaussDiagram& g, std::mt19937_64& rng, const WalkSampler& sampler);

/// Engine seeded from (seed, stream); independent of thread count.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

/// Random diagram of degree n: random pairing and orientation, signs, and markings from `marks`.
GaussDiagram random_gauss(int n, Marking K, const std::vector<Marking>& marks, std::mt19937_64& rng);

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t steps = 0;
  std::array<std::size_t, 5> per_kind{};  // indexed by MoveKind
  std::size_t stuck = 0;                   // walks that found no applicable move
  bool constant = true;
  std::string violation;  // first failing trial/step/move, if any
  std::string summary() const;
};

/// Runs `trials` walks of `walk_length` moves from g0 and checks that every
/// formula keeps its value. Trial t uses stream_rng(seed, t).
VerifyReport verify_invariance(const std::vector<Formula>& formulas, const GaussDiagram& g0, int trials,
                               int walk_length, std::uint64_t seed, const WalkSampler& sampler, int threads = 1);

}  // namespace arrowknot
