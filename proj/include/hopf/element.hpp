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

#ifndef HOPF_ELEMENT_HPP
#define HOPF_ELEMENT_HPP

#include <map>
#include <utility>

#include "hopf/keys.hpp"
#include "hopf/multiset.hpp"
#include "hopf/numbers.hpp"

namespace hopf {

// Finite rational linear combination over a combinatorial basis B (ObjectKey
// or ordered key pairs). Zero coefficients are never stored; term order is
// ascending key order, so printing is deterministic.
template <class B>
class LinearCombination {
 public:
  using Terms = std::map<B, Rational>;

  LinearCombination() = default;

  static LinearCombination basis(B key, Rational coeff = 1) {
    LinearCombination x;
    if (!coeff.is_zero()) x.terms_.emplace(std::move(key), std::move(coeff));
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const B& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LinearCombination add(const LinearCombination& x, const LinearCombination& y) {
    LinearCombination out = x;
    for (const auto& [k, c] : y.terms_) out.add_term(k, c);
    return out;
  }

  friend LinearCombination scale(const Rational& c, const LinearCombination& x) {
    LinearCombination out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : x.terms_) out.terms_.emplace(k, c * v);
    return out;
  }

  friend LinearCombination operator+(const LinearCombination& x, const LinearCombination& y) {
    return add(x, y);
  }
  friend LinearCombination operator-(const LinearCombination& x, const LinearCombination& y) {
    return add(x, scale(-1, y));
  }
  friend LinearCombination operator-(const LinearCombination& x) { return scale(-1, x); }

  friend bool operator==(const LinearCombination& x, const LinearCombination& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const LinearCombination& x, const LinearCombination& y) {
    return !(x == y);
  }

 private:
  Terms terms_;
};

// The vector space spanned by the combinatorial basis.
using Element = LinearCombination<ObjectKey>;

// Its tensor square; the codomain of the coproduct.
using TensorElement = LinearCombination<KeyPair>;

// Σ over M with multiplicities becoming coefficients.
template <class B>
LinearCombination<B> from_multiset(const Multiset<B>& m) {
  LinearCombination<B> out;
  for (const auto& [key, count] : m) out.add_term(key, Rational(count));
  return out;
}

// Bilinear x ⊗ y.
inline TensorElement tensor(const Element& x, const Element& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) out.add_term(KeyPair(kx, ky), cx * cy);
  return out;
}

}  // namespace hopf

#endif  // HOPF_ELEMENT_HPP
