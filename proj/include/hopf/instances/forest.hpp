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

#ifndef HOPF_INSTANCES_FOREST_HPP
#define HOPF_INSTANCES_FOREST_HPP

#include <vector>

#include "hopf/rule.hpp"

namespace hopf::instances {

// Forests of unordered rooted trees; size is the number of vertices.
// Composition is multiset union, decomposition trims branches: the rooted
// part stays in the second component, the cut branches form the first.
//
// Tree keys are nested brackets with children sorted, e.g. "[[],[]]"; a
// forest key joins sorted tree keys with commas.
Rule make_forest_rule();

// Top-level trees of a forest key, in stored order.
std::vector<ObjectKey> forest_key_trees(const ObjectKey& key);

// Canonical forest key containing the given trees.
ObjectKey forest_key_from_trees(std::vector<ObjectKey> trees);

}  // namespace hopf::instances

#endif  // HOPF_INSTANCES_FOREST_HPP
