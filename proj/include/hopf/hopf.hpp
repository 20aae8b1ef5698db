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

#ifndef HOPF_HOPF_HPP
#define HOPF_HOPF_HPP

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "hopf/element.hpp"
#include "hopf/rule.hpp"

namespace hopf {

inline constexpr std::uint64_t kDefaultEnumBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultRecursionDepth = 4'096;

// Bilinear product: on basis keys the sum of all compositions. Requires C1.
Element mul(const Rule& rule, const Element& x, const Element& y);

// Component-wise product on the tensor square:
// (a ⊗ b) * (c ⊗ d) = (a * c) ⊗ (b * d).
TensorElement mul_tensor(const Rule& rule, const TensorElement& x, const TensorElement& y);

// Linear coproduct: on basis keys the sum of all splittings. Requires D1.
TensorElement coproduct(const Rule& rule, const Element& x);

// Coefficient standing at Ø. Requires C3 or D3 (so that Ø exists).
Rational counit(const Rule& rule, const Element& x);

// ε(x) · Ø, the projection onto the span of Ø.
Element counit_projection(const Rule& rule, const Element& x);

// Antipode as the alternating sum of multi-products over Ø-free
// multi-decompositions. Requires D2, D5, CD1 (and C1 for the products).
// Throws NonTermination when the enumeration budget is exhausted, which
// signals a false D5 claim.
Element antipode_sum(const Rule& rule, const ObjectKey& g,
                     std::uint64_t budget = kDefaultEnumBudget);

// Memoization cache for antipode_rec, keyed by canonical key within one rule.
// Safe for concurrent use; behaviorally invisible.
class AntipodeMemo {
 public:
  explicit AntipodeMemo(std::string rule_name) : rule_name_(std::move(rule_name)) {}
  const std::string& rule_name() const { return rule_name_; }

  bool lookup(const ObjectKey& g, Element* out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(g);
    if (it == cache_.end()) return false;
    *out = it->second;
    return true;
  }
  void store(const ObjectKey& g, const Element& value) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(g, value);
  }

 private:
  std::string rule_name_;
  mutable std::mutex mu_;
  std::unordered_map<ObjectKey, Element> cache_;
};

// Antipode by the recursive formula S(Γ) = -Σ S(Γ'') * Γ' over splittings
// with Γ' ≠ Ø. Same value as antipode_sum. Requires D2, D5, CD1.
Element antipode_rec(const Rule& rule, const ObjectKey& g, AntipodeMemo* memo = nullptr,
                     std::uint64_t max_depth = kDefaultRecursionDepth);

// Linear extension of the antipode (recursive algorithm) to whole elements.
Element antipode(const Rule& rule, const Element& x, AntipodeMemo* memo = nullptr);

// Restriction of x to basis keys of size exactly n. Requires CD2.
Element project_grade(const Rule& rule, const Element& x, std::uint64_t n);

}  // namespace hopf

#endif  // HOPF_HOPF_HPP
