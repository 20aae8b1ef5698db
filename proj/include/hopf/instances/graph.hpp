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

#ifndef HOPF_INSTANCES_GRAPH_HPP
#define HOPF_INSTANCES_GRAPH_HPP

#include <utility>
#include <vector>

#include "hopf/rule.hpp"

namespace hopf::instances {

// Undirected multigraphs with loops and no isolated vertices. Basis objects
// are isomorphism classes; size is the number of edges. Composition draws two
// graphs next to each other, decomposition restricts to the two sides of an
// ordered edge partition.
Rule make_graph_rule();

// An edge list over arbitrary positive vertex labels; loops are u-u pairs.
using EdgeList = std::vector<std::pair<int, int>>;

// Canonical key for the isomorphism class of `edges`: each connected
// component is relabeled to its lexicographically least edge list, components
// are sorted and then numbered consecutively.
ObjectKey graph_canonical_key(const EdgeList& edges);

EdgeList graph_edges_from_key(const ObjectKey& key);

}  // namespace hopf::instances

#endif  // HOPF_INSTANCES_GRAPH_HPP
