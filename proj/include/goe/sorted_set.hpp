#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <utility>
#include <vector>

namespace goe {

// Finite set stored as a sorted, duplicate-free vector. Iteration order is the
// element order, which keeps every report and witness deterministic.
template <class T>
class SortedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  SortedSet() = default;
  SortedSet(std::initializer_list<T> items) : SortedSet(std::vector<T>(items)) {}
  explicit SortedSet(std::vector<T> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  // Caller guarantees `items` is strictly increasing.
  static SortedSet from_sorted(std::vector<T> items) {
    SortedSet s;
    s.items_ = std::move(items);
    return s;
  }

  [[nodiscard]] bool contains(const T& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }

  // Position of x in iteration order, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(const T& x) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) return -1;
    return it - items_.begin();
  }

  [[nodiscard]] bool includes(const SortedSet& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(),
                         other.items_.end());
  }

  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] const_iterator begin() const { return items_.begin(); }
  [[nodiscard]] const_iterator end() const { return items_.end(); }
  [[nodiscard]] const T& operator[](std::size_t i) const { return items_[i]; }
  [[nodiscard]] const std::vector<T>& items() const { return items_; }

  friend bool operator==(const SortedSet&, const SortedSet&) = default;

 private:
  std::vector<T> items_;
};

template <class T>
SortedSet<T> set_union(const SortedSet<T>& a, const SortedSet<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SortedSet<T>::from_sorted(std::move(out));
}

template <class T>
SortedSet<T> set_intersection(const SortedSet<T>& a, const SortedSet<T>& b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SortedSet<T>::from_sorted(std::move(out));
}

template <class T>
SortedSet<T> set_difference(const SortedSet<T>& a, const SortedSet<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SortedSet<T>::from_sorted(std::move(out));
}

template <class T>
bool disjoint(const SortedSet<T>& a, const SortedSet<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace goe
