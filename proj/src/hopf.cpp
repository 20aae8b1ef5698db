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

#include "hopf/hopf.hpp"

namespace hopf {

Element mul(const Rule& rule, const Element& x, const Element& y) {
  rule.require(Cond::C1, "mul");
  Element out;
  for (const auto& [g2, c2] : x)
    for (const auto& [g1, c1] : y) {
      const Rational c = c2 * c1;
      for (const auto& [g, m] : compose(rule, g2, g1)) out.add_term(g, c * Rational(m));
    }
  return out;
}

TensorElement mul_tensor(const Rule& rule, const TensorElement& x, const TensorElement& y) {
  rule.require(Cond::C1, "mul_tensor");
  TensorElement out;
  for (const auto& [p2, c2] : x)
    for (const auto& [p1, c1] : y) {
      const Rational c = c2 * c1;
      const Multiset<ObjectKey> left = compose(rule, p2.first, p1.first);
      const Multiset<ObjectKey> right = compose(rule, p2.second, p1.second);
      for (const auto& [l, ml] : left) {
        const Rational cl = c * Rational(ml);
        for (const auto& [r, mr] : right) out.add_term(KeyPair(l, r), cl * Rational(mr));
      }
    }
  return out;
}

TensorElement coproduct(const Rule& rule, const Element& x) {
  rule.require(Cond::D1, "coproduct");
  TensorElement out;
  for (const auto& [g, c] : x)
    for (const auto& [pair, m] : decompose(rule, g)) out.add_term(pair, c * Rational(m));
  return out;
}

Rational counit(const Rule& rule, const Element& x) {
  if (!rule.declared.has(Cond::C3) && !rule.declared.has(Cond::D3))
    throw ConditionNotDeclared("counit", "C3 or D3");
  return x.coeff(rule.neutral);
}

Element counit_projection(const Rule& rule, const Element& x) {
  return Element::basis(rule.neutral, counit(rule, x));
}

namespace {

void require_hopf(const Rule& rule, const char* op) {
  rule.require(Cond::C1, op);
  rule.require(Cond::D2, op);
  rule.require(Cond::D5, op);
  rule.require(Cond::CD1, op);
}

Element tuple_product(const Rule& rule, const KeyTuple& t) {
  Element cur = Element::basis(t.front());
  for (std::size_t i = 1; i < t.size(); ++i)
    cur = mul(rule, cur, Element::basis(t[i]));
  return cur;
}

}  // namespace

Element antipode_sum(const Rule& rule, const ObjectKey& g, std::uint64_t budget) {
  require_hopf(rule, "antipode_sum");
  rule.validate(g);
  if (g == rule.neutral) return Element::basis(rule.neutral);

  EnumBudget guard{budget};
  Element acc;
  // Under CD2 every Ø-free component has size >= 1, so splittings into more
  // than |Γ| parts are impossible. Otherwise run until the splittings die
  // out, with the budget guarding against a false D5 claim.
  const bool graded = rule.declared.has(Cond::CD2);
  const std::uint64_t hard_cap = graded ? rule.size_fn(g) : ~std::uint64_t{0};
  for (std::uint64_t parts = 1; parts <= hard_cap; ++parts) {
    Multiset<KeyTuple> tuples = nontrivial_decompositions(rule, g, parts, &guard);
    if (tuples.empty()) {
      if (graded) continue;
      break;
    }
    const int sign = parts % 2 == 0 ? 1 : -1;
    for (const auto& [t, m] : tuples) {
      Element product = tuple_product(rule, t);
      acc = add(acc, scale(Rational(m) * sign, product));
    }
  }
  return acc;
}

Element antipode_rec(const Rule& rule, const ObjectKey& g, AntipodeMemo* memo,
                     std::uint64_t max_depth) {
  require_hopf(rule, "antipode_rec");
  if (memo && memo->rule_name() != rule.name)
    throw Error("antipode memo belongs to rule '" + memo->rule_name() + "'");
  rule.validate(g);
  if (g == rule.neutral) return Element::basis(rule.neutral);
  if (max_depth == 0)
    throw RecursionBudgetExceeded("antipode recursion depth exhausted at '" + g + "'");

  Element cached;
  if (memo && memo->lookup(g, &cached)) return cached;

  Element sum;
  for (const auto& [pair, m] : decompose(rule, g)) {
    if (pair.second == rule.neutral) continue;
    const Element s = antipode_rec(rule, pair.first, memo, max_depth - 1);
    sum = add(sum, scale(Rational(m), mul(rule, s, Element::basis(pair.second))));
  }
  Element result = scale(-1, sum);
  if (memo) memo->store(g, result);
  return result;
}

Element antipode(const Rule& rule, const Element& x, AntipodeMemo* memo) {
  Element out;
  for (const auto& [g, c] : x) out = add(out, scale(c, antipode_rec(rule, g, memo)));
  return out;
}

Element project_grade(const Rule& rule, const Element& x, std::uint64_t n) {
  rule.require(Cond::CD2, "project_grade");
  Element out;
  for (const auto& [g, c] : x)
    if (rule.size_fn(g) == n) out.add_term(g, c);
  return out;
}

}  // namespace hopf
