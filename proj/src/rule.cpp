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

#include "hopf/rule.hpp"

namespace hopf {

const char* cond_name(Cond c) {
  switch (c) {
    case Cond::C1: return "C1";
    case Cond::C2: return "C2";
    case Cond::C3: return "C3";
    case Cond::C4: return "C4";
    case Cond::D1: return "D1";
    case Cond::D2: return "D2";
    case Cond::D3: return "D3";
    case Cond::D4: return "D4";
    case Cond::D5: return "D5";
    case Cond::CD1: return "CD1";
    case Cond::CD2: return "CD2";
  }
  return "?";
}

std::optional<Cond> cond_from_name(const std::string& name) {
  for (Cond c : kAllConds)
    if (name == cond_name(c)) return c;
  return std::nullopt;
}

Multiset<ObjectKey> compose(const Rule& rule, const ObjectKey& g2, const ObjectKey& g1) {
  rule.validate(g2);
  rule.validate(g1);
  return rule.compose_fn(g2, g1);
}

Multiset<KeyPair> decompose(const Rule& rule, const ObjectKey& g) {
  rule.validate(g);
  return rule.decompose_fn(g);
}

Multiset<ObjectKey> compose_msets(const Rule& rule, const Multiset<ObjectKey>& g2s,
                                  const Multiset<ObjectKey>& g1s) {
  Multiset<ObjectKey>::Builder out;
  for (const auto& [g2, m2] : g2s)
    for (const auto& [g1, m1] : g1s) out.add(compose(rule, g2, g1), m2 * m1);
  return out.build();
}

Multiset<KeyPair> decompose_msets(const Rule& rule, const Multiset<ObjectKey>& gs) {
  Multiset<KeyPair>::Builder out;
  for (const auto& [g, m] : gs) out.add(decompose(rule, g), m);
  return out.build();
}

Multiset<KeyTuple> iterated_decompose(const Rule& rule, const ObjectKey& g,
                                      std::uint64_t steps, SplitStrategy strategy,
                                      EnumBudget* budget) {
  rule.require(Cond::D2, "iterated_decompose");
  if (steps < 1) throw Error("iterated_decompose requires at least one step");

  Multiset<KeyTuple>::Builder first;
  for (const auto& [pair, m] : decompose(rule, g)) {
    if (budget) budget->charge();
    first.add(KeyTuple{pair.first, pair.second}, m);
  }
  Multiset<KeyTuple> tuples = first.build();

  for (std::uint64_t step = 2; step <= steps; ++step) {
    Multiset<KeyTuple>::Builder next;
    for (const auto& [t, m] : tuples) {
      const ObjectKey& target =
          strategy == SplitStrategy::kLeftmost ? t.front() : t.back();
      for (const auto& [pair, k] : decompose(rule, target)) {
        if (budget) budget->charge();
        KeyTuple u;
        u.reserve(t.size() + 1);
        if (strategy == SplitStrategy::kLeftmost) {
          u.push_back(pair.first);
          u.push_back(pair.second);
          u.insert(u.end(), t.begin() + 1, t.end());
        } else {
          u.insert(u.end(), t.begin(), t.end() - 1);
          u.push_back(pair.first);
          u.push_back(pair.second);
        }
        next.add(std::move(u), m * k);
      }
    }
    tuples = next.build();
  }
  return tuples;
}

namespace detail {

Multiset<KeyTuple> nontrivial_splittings(const Rule& rule, const ObjectKey& g,
                                         std::uint64_t parts, EnumBudget* budget) {
  if (parts == 1) {
    if (g == rule.neutral) return {};
    if (budget) budget->charge();
    return Multiset<KeyTuple>::single(KeyTuple{g});
  }
  Multiset<KeyTuple>::Builder out;
  for (const auto& [pair, m] : decompose(rule, g)) {
    if (pair.second == rule.neutral) continue;
    for (const auto& [t, k] : nontrivial_splittings(rule, pair.first, parts - 1, budget)) {
      if (budget) budget->charge();
      KeyTuple u = t;
      u.push_back(pair.second);
      out.add(std::move(u), m * k);
    }
  }
  return out.build();
}

}  // namespace detail

Multiset<KeyTuple> nontrivial_decompositions(const Rule& rule, const ObjectKey& g,
                                             std::uint64_t parts, EnumBudget* budget) {
  rule.require(Cond::D2, "nontrivial_decompositions");
  if (parts < 1) throw Error("nontrivial_decompositions requires parts >= 1");
  rule.validate(g);
  return detail::nontrivial_splittings(rule, g, parts, budget);
}

std::uint64_t object_size(const Rule& rule, const ObjectKey& g) {
  rule.validate(g);
  return rule.size_fn(g);
}

}  // namespace hopf
