// foldlp/vec.hpp
//
// Rational vectors over finite, abstract index sets.  A Vec<I> is a total map
// from its index set to Rational; the index set is explicit so that zero
// vectors over different sets stay distinct.  Every operation is
// order-independent: results depend only on the map, never on how the entries
// happen to be stored.

#ifndef FOLDLP_VEC_HPP
#define FOLDLP_VEC_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/rational.hpp"

namespace foldlp {

template <typename I>
class Vec {
 public:
  using Entry = std::pair<I, Rational>;

  Vec() = default;

  // Total map given as (index, value) pairs; indices must be distinct.
  explicit Vec(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (!(entries_[i - 1].first < entries_[i].first))
        throw std::invalid_argument("Vec: duplicate index");
    }
  }

  Vec(std::initializer_list<Entry> init)
      : Vec(std::vector<Entry>(init.begin(), init.end())) {}

  static Vec zero(const std::vector<I>& indices) {
    std::vector<Entry> e;
    e.reserve(indices.size());
    for (const I& i : indices) e.emplace_back(i, Rational(0));
    return Vec(std::move(e));
  }

  static Vec constant(const std::vector<I>& indices, const Rational& r) {
    Vec v = zero(indices);
    for (auto& e : v.entries_) e.second = r;
    return v;
  }

  static Vec build(const std::vector<I>& indices,
                   const std::function<Rational(const I&)>& f) {
    Vec v = zero(indices);
    for (auto& e : v.entries_) e.second = f(e.first);
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<I> indices() const {
    std::vector<I> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
  }

  bool has_index(const I& i) const { return find(i) != nullptr; }

  const Rational& operator[](const I& i) const {
    const Rational* r = find(i);
    if (!r) throw std::invalid_argument("Vec: index not in index set");
    return *r;
  }

  void set(const I& i, Rational r) {
    auto it = lower_bound(i);
    if (it == entries_.end() || (i < it->first))
      throw std::invalid_argument("Vec: index not in index set");
    it->second = std::move(r);
  }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool same_index_set(const Vec& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].first != o.entries_[i].first) return false;
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.second.is_zero()) return false;
    return true;
  }

  Vec operator-() const {
    Vec v = *this;
    for (auto& e : v.entries_) e.second = -e.second;
    return v;
  }

  Vec& operator+=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i].second += o.entries_[i].second;
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i].second -= o.entries_[i].second;
    return *this;
  }
  Vec& operator*=(const Rational& r) {
    for (auto& e : entries_) e.second *= r;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& r, Vec v) { return v *= r; }
  friend Vec operator*(Vec v, const Rational& r) { return v *= r; }

 private:
  void check_same(const Vec& o) const {
    if (!same_index_set(o)) throw std::invalid_argument("Vec: index-set mismatch");
  }

  typename std::vector<Entry>::iterator lower_bound(const I& i) {
    return std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const Entry& e, const I& key) { return e.first < key; });
  }

  const Rational* find(const I& i) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), i,
        [](const Entry& e, const I& key) { return e.first < key; });
    if (it == entries_.end() || (i < it->first)) return nullptr;
    return &it->second;
  }

  std::vector<Entry> entries_;  // sorted by index
};

// Exact inner product; both vectors must share one index set.
template <typename I>
Rational dot(const Vec<I>& u, const Vec<I>& v) {
  if (!u.same_index_set(v)) throw std::invalid_argument("dot: index-set mismatch");
  Rational acc(0);
  auto it = v.begin();
  for (const auto& e : u) {
    acc += e.second * it->second;
    ++it;
  }
  return acc;
}

// max_i |v_i|; rejects the empty vector (no maximum exists).
template <typename I>
Rational inf_norm(const Vec<I>& v) {
  if (v.empty()) throw std::invalid_argument("inf_norm: empty vector");
  Rational best(0);
  for (const auto& e : v) {
    Rational a = e.second.abs();
    if (best < a) best = a;
  }
  return best;
}

// Sum of per-entry encoding lengths; at least |V| since each entry costs >= 2.
template <typename I>
std::size_t bit_size(const Vec<I>& v) {
  std::size_t total = 0;
  for (const auto& e : v) total += e.second.bit_size();
  return total;
}

}  // namespace foldlp

#endif  // FOLDLP_VEC_HPP
