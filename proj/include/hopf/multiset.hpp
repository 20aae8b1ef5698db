/* Copyright 2026 The hopf-forge Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef HOPF_MULTISET_HPP
#define HOPF_MULTISET_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "hopf/numbers.hpp"

namespace hopf {

// Value-semantics multiset: entries sorted by element, multiplicities >= 1.
// Iteration order is the total order on T, so printed output is deterministic.
template <class T>
class Multiset {
 public:
  using Entry = std::pair<T, Nat>;

  // Collects unsorted (element, count) contributions, then normalizes once.
  class Builder {
   public:
    void reserve(std::size_t n) { raw_.reserve(n); }

    void add(T value, Nat count = 1) {
      if (count > 0) raw_.emplace_back(std::move(value), std::move(count));
    }

    // Adds every entry of `ms`, each multiplicity scaled by `scale`.
    void add(const Multiset& ms, const Nat& scale = 1) {
      if (scale <= 0) return;
      for (const Entry& e : ms.entries_) raw_.emplace_back(e.first, e.second * scale);
    }

    Multiset build() {
      std::sort(raw_.begin(), raw_.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
      std::vector<Entry> merged;
      merged.reserve(raw_.size());
      for (Entry& e : raw_) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(std::move(e));
      }
      raw_.clear();
      return Multiset(std::move(merged));
    }

   private:
    std::vector<Entry> raw_;
  };

  Multiset() = default;

  static Multiset single(T value, Nat count = 1) {
    Multiset m;
    if (count > 0) m.entries_.emplace_back(std::move(value), std::move(count));
    return m;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Number of elements counted with multiplicity (the # of the docs).
  Nat cardinality() const {
    Nat total = 0;
    for (const Entry& e : entries_) total += e.second;
    return total;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Nat multiplicity(const T& x) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](const Entry& e, const T& v) { return e.first < v; });
    if (it != entries_.end() && it->first == x) return it->second;
    return 0;
  }

  bool contains(const T& x) const { return multiplicity(x) > 0; }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }

 private:
  explicit Multiset(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}

  std::vector<Entry> entries_;
};

// A ⊎ B: multiplicities add.
template <class T>
Multiset<T> msum(const Multiset<T>& a, const Multiset<T>& b) {
  typename Multiset<T>::Builder out;
  out.reserve(a.support_size() + b.support_size());
  out.add(a);
  out.add(b);
  return out.build();
}

// A × B: multiplicities multiply on ordered pairs.
template <class T, class U>
Multiset<std::pair<T, U>> mprod(const Multiset<T>& a, const Multiset<U>& b) {
  typename Multiset<std::pair<T, U>>::Builder out;
  out.reserve(a.support_size() * b.support_size());
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out.add(std::pair<T, U>(x, y), m * n);
  return out.build();
}

template <class T>
Nat multiplicity(const Multiset<T>& a, const T& x) {
  return a.multiplicity(x);
}

// A ⊆ B with multiplicities: m_A(x) <= m_B(x) everywhere.
template <class T>
bool msubset(const Multiset<T>& a, const Multiset<T>& b) {
  auto ib = b.begin();
  for (const auto& [x, m] : a) {
    while (ib != b.end() && ib->first < x) ++ib;
    if (ib == b.end() || !(ib->first == x) || ib->second < m) return false;
  }
  return true;
}

}  // namespace hopf

#endif  // HOPF_MULTISET_HPP
