#pragma once

#include <map>
#include <utility>
#include <vector>

#include "arrowknot/lincomb.hpp"
#include "arrowknot/rational.hpp"

namespace arrowknot {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec make_sparse(const std::vector<Rational>& dense);
std::vector<Rational> make_dense(const SparseVec& v, int columns);
/// v + s·w
SparseVec axpy(const SparseVec& v, const Rational& s, const SparseVec& w);
Rational dot(const SparseVec& v, const SparseVec& w);
/// Scales to integer entries with gcd 1 and a positive first entry.
SparseVec primitive(const SparseVec& v);

/// Row echelon form built incrementally. Each stored row has leading entry 1
/// at its pivot column and no entries left of it.
class Echelon {
 public:
  /// Adds a row; returns true when it was independent of the rows so far.
  bool insert(SparseVec v);
  /// Residue of v after elimination against the stored rows (zero iff v is in their span).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(pivots_.size()); }
  /// Basis of {x : row·x = 0 for all rows} in dimension `columns`, each vector primitive.
  std::vector<SparseVec> kernel_basis(int columns) const;

 private:
  std::map<int, SparseVec> pivots_;
};

int rank(const std::vector<SparseVec>& rows);
bool in_span(const SparseVec& v, const std::vector<SparseVec>& rows);

/// Rows over a duplicate-free list of canonical diagrams.
template <class Key>
class DiagramIndexedMatrix {
 public:
  DiagramIndexedMatrix() = default;
  explicit DiagramIndexedMatrix(std::vector<Key> columns) {
    for (Key& k : columns) add_column(std::move(k));
  }

  int add_column(Key k) {
    auto [it, inserted] = index_.try_emplace(k, static_cast<int>(columns_.size()));
    if (inserted) columns_.push_back(std::move(k));
    return it->second;
  }
  int column_of(const Key& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
  }
  int column_count() const { return static_cast<int>(columns_.size()); }
  const std::vector<Key>& columns() const { return columns_; }
  const std::vector<SparseVec>& rows() const { return rows_; }

  /// Coordinates of `x` with every key weighted by `weight(key)`. Keys
  /// outside the columns are dropped when `extend` is false, added otherwise.
  template <class Weight>
  SparseVec coordinates(const LinComb<Key>& x, Weight weight, bool extend) {
    SparseVec v;
    for (const auto& [k, c] : x) {
      int col = extend ? add_column(k) : column_of(k);
      if (col >= 0) v.emplace_back(col, c * weight(k));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  SparseVec coordinates(const LinComb<Key>& x, bool extend = false) {
    return coordinates(x, [](const Key&) { return Rational(1); }, extend);
  }

  void add_row(SparseVec v) {
    if (!v.empty()) rows_.push_back(std::move(v));
  }

  LinComb<Key> to_lincomb(const SparseVec& v) const {
    LinComb<Key> out;
    for (const auto& [col, c] : v) out.add_canonical(columns_[static_cast<std::size_t>(col)], c);
    return out;
  }

 private:
  std::vector<Key> columns_;
  std::map<Key, int, EncodingLess> index_;
  std::vector<SparseVec> rows_;
};

/// Basis of the kernel of the matrix, primitive integer vectors.
template <class Key>
std::vector<SparseVec> kernel(const DiagramIndexedMatrix<Key>& m) {
  Echelon e;
  for (const SparseVec& r : m.rows()) e.insert(r);
  return e.kernel_basis(m.column_count());
}

}  // namespace arrowknot
