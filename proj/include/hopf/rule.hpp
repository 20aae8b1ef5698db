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

#ifndef HOPF_RULE_HPP
#define HOPF_RULE_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/keys.hpp"
#include "hopf/multiset.hpp"

namespace hopf {

// The conditions a composition/decomposition rule may satisfy.
enum class Cond : unsigned {
  C1,   // finiteness of composition
  C2,   // triple composition (associativity)
  C3,   // neutral object
  C4,   // symmetry of composition (commutativity)
  D1,   // finiteness of decomposition
  D2,   // triple decomposition (co-associativity)
  D3,   // void object, trivial splittings
  D4,   // symmetry of decomposition (co-commutativity)
  D5,   // finiteness of nontrivial multi-decompositions
  CD1,  // composition-decomposition compatibility
  CD2,  // compatibility with size
};

inline constexpr Cond kAllConds[] = {Cond::C1, Cond::C2,  Cond::C3, Cond::C4,
                                     Cond::D1, Cond::D2,  Cond::D3, Cond::D4,
                                     Cond::D5, Cond::CD1, Cond::CD2};

const char* cond_name(Cond c);
std::optional<Cond> cond_from_name(const std::string& name);

class CondSet {
 public:
  CondSet() = default;
  CondSet(std::initializer_list<Cond> cs) {
    for (Cond c : cs) insert(c);
  }

  void insert(Cond c) { bits_ |= bit(c); }
  bool has(Cond c) const { return bits_ & bit(c); }
  CondSet with(Cond c) const {
    CondSet s = *this;
    s.insert(c);
    return s;
  }
  friend bool operator==(CondSet a, CondSet b) { return a.bits_ == b.bits_; }

 private:
  static unsigned bit(Cond c) { return 1u << static_cast<unsigned>(c); }
  unsigned bits_ = 0;
};

// One combinatorial class: how its objects compose, decompose and measure,
// together with the conditions the rule claims to satisfy. The claims are not
// certificates; the axiom lab verifies them on bounded domains.
//
// All maps take and produce canonical keys and must be deterministic. Rules
// are immutable after construction and safe to share across threads.
struct Rule {
  std::string name;
  CondSet declared;
  ObjectKey neutral = kVoidKey;

  std::function<Multiset<ObjectKey>(const ObjectKey&, const ObjectKey&)> compose_fn;
  std::function<Multiset<KeyPair>(const ObjectKey&)> decompose_fn;
  std::function<std::uint64_t(const ObjectKey&)> size_fn;

  // Throws MalformedObject. Unset means every key is accepted.
  std::function<void(const ObjectKey&)> validate_fn;

  // Instance services; unset on rules built programmatically.
  std::function<ObjectKey(const std::string&)> parse_fn;
  std::function<std::string(const ObjectKey&)> print_fn;
  std::function<std::vector<ObjectKey>(std::uint64_t)> enumerate_fn;

  void validate(const ObjectKey& key) const {
    if (validate_fn) validate_fn(key);
  }
  void require(Cond c, const char* op) const {
    if (!declared.has(c)) throw ConditionNotDeclared(op, cond_name(c));
  }
};

// Guard against runaway enumerations; charge() throws when exhausted.
struct EnumBudget {
  std::uint64_t remaining;
  void charge(std::uint64_t n = 1) {
    if (n > remaining) throw NonTermination("enumeration budget exhausted");
    remaining -= n;
  }
};

// Γ2 ◁ Γ1: the multiset of all possible compositions.
Multiset<ObjectKey> compose(const Rule& rule, const ObjectKey& g2, const ObjectKey& g1);

// ⟨Γ⟩: the multiset of all ordered splittings.
Multiset<KeyPair> decompose(const Rule& rule, const ObjectKey& g);

// Lift of ◁ to multisets: compose element pairs and collect everything.
Multiset<ObjectKey> compose_msets(const Rule& rule, const Multiset<ObjectKey>& g2s,
                                  const Multiset<ObjectKey>& g1s);

// Lift of ⟨·⟩ to multisets.
Multiset<KeyPair> decompose_msets(const Rule& rule, const Multiset<ObjectKey>& gs);

enum class SplitStrategy { kLeftmost, kRightmost };

// n-step splitting into (n+1)-tuples; one step is ⟨Γ⟩ itself. The default
// recurses on the leftmost component; D2 makes the strategy irrelevant, and
// the axiom lab exercises the alternative. Requires D2.
Multiset<KeyTuple> iterated_decompose(const Rule& rule, const ObjectKey& g,
                                      std::uint64_t steps,
                                      SplitStrategy strategy = SplitStrategy::kLeftmost,
                                      EnumBudget* budget = nullptr);

// All splittings into exactly `parts` components none of which is Ø.
// Requires D2.
Multiset<KeyTuple> nontrivial_decompositions(const Rule& rule, const ObjectKey& g,
                                             std::uint64_t parts,
                                             EnumBudget* budget = nullptr);

// |Γ| for a validated object.
std::uint64_t object_size(const Rule& rule, const ObjectKey& g);

namespace detail {

// Same splittings as nontrivial_decompositions but without the D2 declaration
// gate; the axiom lab also probes conditions a rule does not claim.
Multiset<KeyTuple> nontrivial_splittings(const Rule& rule, const ObjectKey& g,
                                         std::uint64_t parts, EnumBudget* budget = nullptr);

}  // namespace detail

}  // namespace hopf

#endif  // HOPF_RULE_HPP
