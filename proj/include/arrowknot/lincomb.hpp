#pragma once

#include <compare>
#include <map>
#include <utility>

#include "arrowknot/diagram.hpp"
#include "arrowknot/rational.hpp"

namespace arrowknot {

struct EncodingLess {
  template <class Key>
  bool operator()(const Key& a, const Key& b) const {
    return a.compare_encoding(b) < 0;
  }
};

template <Species S>
Diagram<S> canonical_key(const Diagram<S>& d) {
  return canonicalize(d);
}

/// Finite formal combination of diagrams with exact rational coefficients.
/// Keys are always canonical and no zero coefficient is ever stored.
template <class Key>
class LinComb {
 public:
  using map_type = std::map<Key, Rational, EncodingLess>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

  void add(const Key& k, const Rational& c) { add_canonical(canonical_key(k), c); }

  /// Caller guarantees `k` is already canonical.
  void add_canonical(const Key& k, const Rational& c) {
    if (arrowknot::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (arrowknot::is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(canonical_key(k));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_canonical(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_canonical(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (arrowknot::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (it->first.compare_encoding(k) != 0 || it->second != c) return false;
      ++it;
    }
    return true;
  }

  /// Lexicographic order over (key, coefficient) pairs; used to deduplicate.
  friend std::strong_ordering compare(const LinComb& a, const LinComb& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (auto c = ia->first.compare_encoding(ib->first); c != 0) return c;
      const int r = cmp(ia->second, ib->second);
      if (r != 0) return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  /// Scales so that the coefficient of the least key is 1.
  LinComb normalized() const {
    if (terms_.empty()) return *this;
    LinComb out = *this;
    out *= Rational(1) / terms_.begin()->second;
    return out;
  }

  template <class Pred>
  LinComb filtered(Pred keep) const {
    LinComb out;
    for (const auto& [k, c] : terms_) {
      if (keep(k)) out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace arrowknot
