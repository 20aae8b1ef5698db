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

#include "hopf/instances.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace hopf::instances {

Rule make_rule(const std::string& name, const std::string& alphabet) {
  if (name == "free") return make_free_rule(alphabet.empty() ? "ab" : alphabet);
  if (name == "symmetric") return make_symmetric_rule(alphabet.empty() ? "ab" : alphabet);
  if (name == "shuffle") return make_shuffle_rule(alphabet.empty() ? "ab" : alphabet);
  if (name == "polynomial") return make_polynomial_rule(alphabet.empty() ? "x" : alphabet);
  if (name == "graph") return make_graph_rule();
  if (name == "forest") return make_forest_rule();
  throw UnknownInstance(name);
}

std::vector<ObjectKey> enumerate_basis(const Rule& rule, std::uint64_t bound) {
  if (!rule.enumerate_fn)
    throw Error("rule '" + rule.name + "' has no basis enumerator");
  return rule.enumerate_fn(bound);
}

ObjectKey parse_object(const Rule& rule, const std::string& text) {
  if (!rule.parse_fn) throw Error("rule '" + rule.name + "' has no object parser");
  return rule.parse_fn(text);
}

std::string print_object(const Rule& rule, const ObjectKey& key) {
  if (!rule.print_fn) throw Error("rule '" + rule.name + "' has no object printer");
  return rule.print_fn(key);
}

namespace {

// Objects reachable from the generators, each with the factorization it was
// first discovered through. Grows lazily; guarded so rules stay shareable
// across threads.
class MonoidClosure {
 public:
  explicit MonoidClosure(MonoidSpec spec) : spec_(std::move(spec)) {
    known_.emplace(spec_.neutral, KeyTuple{});
    queue_.push_back(spec_.neutral);
  }

  const MonoidSpec& spec() const { return spec_; }

  // Factorization of `key` into generators, leftmost factor first.
  KeyTuple factorization(const ObjectKey& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = known_.find(key);
    while (it == known_.end()) {
      if (queue_.empty() || known_.size() >= spec_.closure_budget)
        throw MalformedObject("object is not generated by rule '" + spec_.name + "'");
      expand_one();
      it = known_.find(key);
    }
    return it->second;
  }

  ObjectKey compose_one(const ObjectKey& g2, const ObjectKey& g1) const {
    Multiset<ObjectKey> out = spec_.compose_fn(g2, g1);
    if (out.support_size() != 1 || out.entries().front().second != 1)
      throw NotAMonoid("composition is not singleton-valued on '" + g2 + "', '" + g1 + "'");
    return out.entries().front().first;
  }

 private:
  void expand_one() {
    const ObjectKey x = queue_.front();
    queue_.pop_front();
    const KeyTuple fact = known_.at(x);
    for (const ObjectKey& g : spec_.generators) {
      ObjectKey y = compose_one(g, x);
      if (known_.count(y)) continue;
      KeyTuple yfact;
      yfact.reserve(fact.size() + 1);
      yfact.push_back(g);
      yfact.insert(yfact.end(), fact.begin(), fact.end());
      queue_.push_back(y);
      known_.emplace(std::move(y), std::move(yfact));
    }
  }

  MonoidSpec spec_;
  std::mutex mu_;
  std::map<ObjectKey, KeyTuple> known_;
  std::deque<ObjectKey> queue_;
};

Multiset<KeyPair> generator_splits(const MonoidClosure& closure, const ObjectKey& g) {
  if (closure.spec().gen_decompose) return closure.spec().gen_decompose(g);
  Multiset<KeyPair>::Builder out;
  out.add(KeyPair(closure.spec().neutral, g));
  out.add(KeyPair(g, closure.spec().neutral));
  return out.build();
}

}  // namespace

Rule monoid_rule_from_generators(MonoidSpec spec) {
  if (!spec.compose_fn) throw Error("monoid rule needs a composition");
  const bool primitive = !spec.gen_decompose;
  auto closure = std::make_shared<MonoidClosure>(std::move(spec));

  // Singleton-valuedness is a precondition; probe it on the generators now.
  for (const ObjectKey& a : closure->spec().generators)
    for (const ObjectKey& b : closure->spec().generators) closure->compose_one(a, b);

  Rule r;
  r.name = closure->spec().name;
  r.neutral = closure->spec().neutral;
  r.declared = primitive
                   ? CondSet{Cond::C1, Cond::C2, Cond::C3, Cond::D1, Cond::D2,
                             Cond::D3, Cond::D4, Cond::D5, Cond::CD1}
                   : CondSet{Cond::C1, Cond::C2, Cond::C3, Cond::D1, Cond::CD1};
  r.compose_fn = [closure](const ObjectKey& g2, const ObjectKey& g1) {
    return Multiset<ObjectKey>::single(closure->compose_one(g2, g1));
  };
  r.decompose_fn = [closure](const ObjectKey& g) {
    const KeyTuple fact = closure->factorization(g);
    // Split every factor and compose the halves component-wise.
    Multiset<KeyPair> acc = Multiset<KeyPair>::single(
        KeyPair(closure->spec().neutral, closure->spec().neutral));
    for (const ObjectKey& factor : fact) {
      Multiset<KeyPair> splits = generator_splits(*closure, factor);
      Multiset<KeyPair>::Builder next;
      for (const auto& [state, m] : acc)
        for (const auto& [split, k] : splits)
          next.add(KeyPair(closure->compose_one(state.first, split.first),
                           closure->compose_one(state.second, split.second)),
                   m * k);
      acc = next.build();
    }
    return acc;
  };
  r.validate_fn = [closure](const ObjectKey& g) { closure->factorization(g); };
  if (closure->spec().size_fn) {
    r.size_fn = closure->spec().size_fn;
  } else {
    r.size_fn = [closure](const ObjectKey& g) {
      return static_cast<std::uint64_t>(closure->factorization(g).size());
    };
  }
  return r;
}

}  // namespace hopf::instances
