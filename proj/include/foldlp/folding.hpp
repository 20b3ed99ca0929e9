// foldlp/folding.hpp
//
// Index maps over unordered variable sets and the folding calculus built on
// them: class-averaging (fold), class-summing (almost_fold), the class-constant
// section (unfold), the agreement predicate, and the refine step that splits
// classes by the values of a distinguishing vector.  Class numbering is always
// derived from values, never from storage order, so every operation here is
// equivariant under relabeling of the index set.

#ifndef FOLDLP_FOLDING_HPP
#define FOLDLP_FOLDING_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// An onto map source -> {0, .., k-1}; the classes partition the source set and
// their numbering orders them.
template <typename I>
class IndexMap {
 public:
  IndexMap() = default;

  explicit IndexMap(std::vector<std::pair<I, std::size_t>> assignment)
      : assignment_(std::move(assignment)) {
    std::sort(assignment_.begin(), assignment_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < assignment_.size(); ++i)
      if (!(assignment_[i - 1].first < assignment_[i].first))
        throw std::invalid_argument("IndexMap: duplicate index");
    std::vector<bool> seen;
    for (const auto& [v, cls] : assignment_) {
      if (cls >= seen.size()) seen.resize(cls + 1, false);
      seen[cls] = true;
    }
    k_ = seen.size();
    for (bool s : seen)
      if (!s) throw std::invalid_argument("IndexMap: assignment not onto [k]");
  }

  // The one-class map on a nonempty source set.
  static IndexMap trivial(const std::vector<I>& source) {
    if (source.empty()) throw std::invalid_argument("IndexMap: empty source");
    std::vector<std::pair<I, std::size_t>> a;
    a.reserve(source.size());
    for (const I& v : source) a.emplace_back(v, 0);
    return IndexMap(std::move(a));
  }

  std::size_t class_count() const { return k_; }
  std::size_t size() const { return assignment_.size(); }

  std::vector<I> source() const {
    std::vector<I> out;
    out.reserve(assignment_.size());
    for (const auto& e : assignment_) out.push_back(e.first);
    return out;
  }

  std::size_t class_of(const I& v) const {
    auto it = std::lower_bound(
        assignment_.begin(), assignment_.end(), v,
        [](const auto& e, const I& key) { return e.first < key; });
    if (it == assignment_.end() || (v < it->first))
      throw std::invalid_argument("IndexMap: index not in source");
    return it->second;
  }

  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> sizes(k_, 0);
    for (const auto& e : assignment_) ++sizes[e.second];
    return sizes;
  }

  std::vector<std::vector<I>> classes() const {
    std::vector<std::vector<I>> out(k_);
    for (const auto& e : assignment_) out[e.second].push_back(e.first);
    return out;
  }

  auto begin() const { return assignment_.begin(); }
  auto end() const { return assignment_.end(); }

  friend bool operator==(const IndexMap& a, const IndexMap& b) {
    return a.assignment_ == b.assignment_;
  }
  friend bool operator!=(const IndexMap& a, const IndexMap& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<I, std::size_t>> assignment_;  // sorted by index
  std::size_t k_ = 0;
};

// Ordered class labels 0..k-1 used as the index set of folded vectors.
inline std::vector<std::size_t> class_labels(std::size_t k) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = i;
  return out;
}

// (almost_fold x)_i = sum of x over class i.
template <typename I>
Vec<std::size_t> almost_fold(const Vec<I>& x, const IndexMap<I>& sigma) {
  if (x.indices() != sigma.source())
    throw std::invalid_argument("almost_fold: index-set mismatch");
  Vec<std::size_t> out = Vec<std::size_t>::zero(class_labels(sigma.class_count()));
  std::vector<Rational> acc(sigma.class_count(), Rational(0));
  for (const auto& [v, val] : x) acc[sigma.class_of(v)] += val;
  for (std::size_t i = 0; i < acc.size(); ++i) out.set(i, acc[i]);
  return out;
}

// (fold x)_i = class average of x over class i.
template <typename I>
Vec<std::size_t> fold(const Vec<I>& x, const IndexMap<I>& sigma) {
  Vec<std::size_t> out = almost_fold(x, sigma);
  std::vector<std::size_t> sizes = sigma.class_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out.set(i, out[i] / Rational(static_cast<long>(sizes[i])));
  return out;
}

// (unfold xbar)_v = xbar_{sigma(v)}.
template <typename I>
Vec<I> unfold(const Vec<std::size_t>& xbar, const IndexMap<I>& sigma) {
  if (xbar.indices() != class_labels(sigma.class_count()))
    throw std::invalid_argument("unfold: index-set mismatch");
  std::vector<std::pair<I, Rational>> entries;
  entries.reserve(sigma.size());
  for (const auto& [v, cls] : sigma) entries.emplace_back(v, xbar[cls]);
  return Vec<I>(std::move(entries));
}

// True iff x is constant on every sigma-class.
template <typename I>
bool agrees_with(const Vec<I>& x, const IndexMap<I>& sigma) {
  if (x.indices() != sigma.source())
    throw std::invalid_argument("agrees_with: index-set mismatch");
  std::vector<const Rational*> first(sigma.class_count(), nullptr);
  for (const auto& [v, val] : x) {
    std::size_t cls = sigma.class_of(v);
    if (first[cls] == nullptr)
      first[cls] = &val;
    else if (*first[cls] != val)
      return false;
  }
  return true;
}

// The refined map sigma': classes keep their sigma-order and split internally
// by ascending d-value.  sigma' == sigma exactly when d agrees with sigma, and
// otherwise has strictly more classes.
template <typename I>
IndexMap<I> refine(const IndexMap<I>& sigma, const Vec<I>& d) {
  if (d.indices() != sigma.source())
    throw std::invalid_argument("refine: index-set mismatch");
  // New classes are the distinct (old class, d-value) pairs in lexicographic
  // order: old-class order first, then ascending value.
  std::map<std::pair<std::size_t, Rational>, std::size_t> rank;
  for (const auto& [v, val] : d) rank[{sigma.class_of(v), val}] = 0;
  std::size_t next = 0;
  for (auto& e : rank) e.second = next++;
  std::vector<std::pair<I, std::size_t>> assignment;
  assignment.reserve(sigma.size());
  for (const auto& [v, val] : d)
    assignment.emplace_back(v, rank.at({sigma.class_of(v), val}));
  return IndexMap<I>(std::move(assignment));
}

}  // namespace foldlp

#endif  // FOLDLP_FOLDING_HPP
