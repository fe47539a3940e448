#include "arrowknot/ratlinalg.hpp"

#include <algorithm>

namespace arrowknot {

SparseVec make_sparse(const std::vector<Rational>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!is_zero(dense[i])) v.emplace_back(static_cast<int>(i), dense[i]);
  }
  return v;
}

std::vector<Rational> make_dense(const SparseVec& v, int columns) {
  std::vector<Rational> d(static_cast<std::size_t>(columns));
  for (const auto& [c, x] : v) d[static_cast<std::size_t>(c)] = x;
  return d;
}

SparseVec axpy(const SparseVec& v, const Rational& s, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() || j != w.end()) {
    if (j == w.end() || (i != v.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == v.end() || j->first < i->first) {
      out.emplace_back(j->first, s * j->second);
      ++j;
    } else {
      Rational x = i->second + s * j->second;
      if (!is_zero(x)) out.emplace_back(i->first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational dot(const SparseVec& v, const SparseVec& w) {
  Rational s = 0;
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() && j != w.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

SparseVec primitive(const SparseVec& v) {
  if (v.empty()) return v;
  Integer l = 1;
  for (const auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& [c, x] : v) {
    Integer num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (sgn(v.front().second) < 0) scale = -scale;
  SparseVec out = v;
  for (auto& [c, x] : out) x *= scale;
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivots_.find(v[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    const Rational s = -v[pos].second;
    v = axpy(v, s, it->second);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.front().second;
  for (auto& [c, x] : v) x /= lead;
  pivots_.emplace(v.front().first, std::move(v));
  return true;
}

std::vector<SparseVec> Echelon::kernel_basis(int columns) const {
  // Reduced row echelon form: clear every pivot column from the rows above it.
  std::map<int, SparseVec> rref;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVec row = it->second;
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto p = rref.find(row[pos].first);
      if (p == rref.end()) {
        ++pos;
        continue;
      }
      const Rational s = -row[pos].second;
      row = axpy(row, s, p->second);
    }
    rref.emplace(it->first, std::move(row));
  }
  // For each free column f: x_f = 1, x_p = -R[p][f].
  std::vector<std::vector<std::pair<int, Rational>>> by_free(static_cast<std::size_t>(columns));
  for (const auto& [p, row] : rref) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      by_free[static_cast<std::size_t>(row[k].first)].emplace_back(p, -row[k].second);
    }
  }
  std::vector<SparseVec> basis;
  for (int f = 0; f < columns; ++f) {
    if (pivots_.count(f)) continue;
    SparseVec v = std::move(by_free[static_cast<std::size_t>(f)]);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(primitive(v));
  }
  return basis;
}

int rank(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const SparseVec& r : rows) e.insert(r);
  return e.rank();
}

bool in_span(const SparseVec& v, const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const SparseVec& r : rows) e.insert(r);
  return e.contains(v);
}

}  // namespace arrowknot
