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

#ifndef HOPF_RENDER_HPP
#define HOPF_RENDER_HPP

#include <string>

#include "hopf/element.hpp"
#include "hopf/rule.hpp"

namespace hopf {

// Human-readable forms using the rule's object literals. Elements print as
// "2 w"ab" + 1/3 w"ba"" with terms in ascending key order; tensor basis pairs
// print as `a (x) b`. Both re-parse to equal values.
std::string element_to_string(const Rule& rule, const Element& x);
std::string tensor_to_string(const Rule& rule, const TensorElement& x);

std::string multiset_to_string(const Rule& rule, const Multiset<ObjectKey>& m);
std::string multiset_to_string(const Rule& rule, const Multiset<KeyPair>& m);
std::string multiset_to_string(const Rule& rule, const Multiset<KeyTuple>& m);

}  // namespace hopf

#endif  // HOPF_RENDER_HPP
