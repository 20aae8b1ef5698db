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

#ifndef HOPF_INSTANCES_HPP
#define HOPF_INSTANCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopf/instances/forest.hpp"
#include "hopf/instances/graph.hpp"
#include "hopf/instances/words.hpp"
#include "hopf/rule.hpp"

namespace hopf::instances {

inline const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names{"free",       "symmetric", "shuffle",
                                              "polynomial", "graph",     "forest"};
  return names;
}

// Builds a built-in rule. Word instances default to the alphabet "ab",
// polynomial to "x"; graph and forest ignore the alphabet.
Rule make_rule(const std::string& name, const std::string& alphabet = "");

// All canonical objects of size <= bound, duplicate-free, ascending by
// (size, key), Ø included.
std::vector<ObjectKey> enumerate_basis(const Rule& rule, std::uint64_t bound);

// Object literal in the instance grammar -> canonical key.
ObjectKey parse_object(const Rule& rule, const std::string& text);

// Canonical key -> object literal.
std::string print_object(const Rule& rule, const ObjectKey& key);

// A determinate (monoidal) composition law together with a generating class.
// Decomposition is specified on the generators only (primitively when
// `gen_decompose` is unset) and extended to the whole class the compatible
// way, so CD1 holds by construction.
struct MonoidSpec {
  std::string name = "monoid";
  std::vector<ObjectKey> generators;
  std::function<Multiset<ObjectKey>(const ObjectKey&, const ObjectKey&)> compose_fn;
  std::function<Multiset<KeyPair>(const ObjectKey&)> gen_decompose;  // optional
  ObjectKey neutral = kVoidKey;
  std::function<std::uint64_t(const ObjectKey&)> size_fn;  // default: generator count
  std::uint64_t closure_budget = 100'000;                  // discovered objects
};

// Objects are discovered as compositions of generators; decomposing an object
// that the closure cannot reach within budget is a MalformedObject. With the
// primitive default the rule declares D1-D5; a custom generator decomposition
// declares only D1 and callers add what they can justify.
Rule monoid_rule_from_generators(MonoidSpec spec);

}  // namespace hopf::instances

#endif  // HOPF_INSTANCES_HPP
