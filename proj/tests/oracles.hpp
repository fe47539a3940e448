#pragma once

// Independent reference implementations used as test oracles. None of them
// goes through the library's canonical form, elimination or enumeration.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "arrowknot/diagram.hpp"
#include "arrowknot/rational.hpp"

namespace oracle {

using arrowknot::Arrow;
using arrowknot::Marking;
using arrowknot::Rational;

using Tuple = std::tuple<int, int, int, Marking>;

inline std::vector<Tuple> rotated_tuples(const std::vector<Arrow>& arrows, int r) {
  const int size = 2 * static_cast<int>(arrows.size());
  std::vector<Tuple> out;
  for (const Arrow& a : arrows) out.emplace_back((a.tail - r + size) % size, (a.head - r + size) % size, a.sign, a.mark);
  std::sort(out.begin(), out.end());
  return out;
}

/// Rotation class of a diagram: least sorted tuple list over all rotations.
inline std::vector<Tuple> rotation_class(const std::vector<Arrow>& arrows) {
  const int size = 2 * static_cast<int>(arrows.size());
  std::vector<Tuple> best = rotated_tuples(arrows, 0);
  for (int r = 1; r < size; ++r) best = std::min(best, rotated_tuples(arrows, r));
  return best;
}

/// Rotations fixing the diagram.
inline int symmetry_count(const std::vector<Arrow>& arrows) {
  const int size = 2 * static_cast<int>(arrows.size());
  if (size == 0) return 1;
  const auto base = rotated_tuples(arrows, 0);
  int count = 0;
  for (int r = 0; r < size; ++r) count += rotated_tuples(arrows, r) == base ? 1 : 0;
  return count;
}

/// Number of distinct degree-n diagrams with markings from `marks`; signs
/// range over +-1 when `signed_arrows`, else are 0.
inline std::size_t count_diagrams(int n, const std::vector<Marking>& marks, bool signed_arrows) {
  std::set<std::vector<Tuple>> seen;
  std::vector<Arrow> arrows;
  std::vector<bool> used(static_cast<std::size_t>(2 * n), false);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int p = 0; p < 2 * n; ++p) {
      if (!used[static_cast<std::size_t>(p)]) {
        first = p;
        break;
      }
    }
    if (first < 0) {
      seen.insert(rotation_class(arrows));
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int q = first + 1; q < 2 * n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      used[static_cast<std::size_t>(q)] = true;
      for (int orient = 0; orient < 2; ++orient) {
        for (Marking m : marks) {
          for (int s : signed_arrows ? std::vector<int>{1, -1} : std::vector<int>{0}) {
            arrows.push_back(orient ? Arrow{first, q, s, m} : Arrow{q, first, s, m});
            rec();
            arrows.pop_back();
          }
        }
      }
      used[static_cast<std::size_t>(q)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec();
  return seen.size();
}

/// Determinant by cofactor expansion.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// Rank as the size of the largest nonsingular square minor.
inline int rank_by_minors(const std::vector<std::vector<Rational>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int k = std::min(rows, cols); k > 0; --k) {
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    std::function<bool(int, int)> pick_rows;
    std::function<bool(int, int)> pick_cols = [&](int start, int depth) -> bool {
      if (depth == k) {
        std::vector<std::vector<Rational>> sub(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
        for (int a = 0; a < k; ++a) {
          for (int b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        }
        return det(sub) != 0;
      }
      for (int c = start; c < cols; ++c) {
        ci[depth] = c;
        if (pick_cols(c + 1, depth + 1)) return true;
      }
      return false;
    };
    pick_rows = [&](int start, int depth) -> bool {
      if (depth == k) return pick_cols(0, 0);
      for (int r = start; r < rows; ++r) {
        ri[depth] = r;
        if (pick_rows(r + 1, depth + 1)) return true;
      }
      return false;
    };
    if (pick_rows(0, 0)) return k;
  }
  return 0;
}

inline std::vector<std::vector<Rational>> random_matrix(int rows, int cols, std::mt19937_64& rng, int zero_percent = 40) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> pct(0, 99);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (auto& row : m) {
    for (auto& x : row) x = pct(rng) < zero_percent ? Rational(0) : Rational(Rational(val(rng)) / (1 + pct(rng) % 3));
  }
  return m;
}

}  // namespace oracle
