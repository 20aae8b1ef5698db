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

#ifndef HOPF_KEYS_HPP
#define HOPF_KEYS_HPP

#include <string>
#include <utility>
#include <vector>

namespace hopf {

// Canonical encoding of a combinatorial object, totally ordered as a byte
// string. Two objects are equal iff their keys are equal.
using ObjectKey = std::string;

// The neutral/void object Ø keeps the reserved empty key in every instance,
// so it sorts first and is trivially recognizable.
inline const ObjectKey kVoidKey{};

inline bool is_void(const ObjectKey& k) { return k.empty(); }

using KeyPair = std::pair<ObjectKey, ObjectKey>;
using KeyTuple = std::vector<ObjectKey>;

}  // namespace hopf

#endif  // HOPF_KEYS_HPP
