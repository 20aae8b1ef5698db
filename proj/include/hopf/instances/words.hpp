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

#ifndef HOPF_INSTANCES_WORDS_HPP
#define HOPF_INSTANCES_WORDS_HPP

#include <string>

#include "hopf/rule.hpp"

namespace hopf::instances {

// Words over a finite alphabet; canonical key is the letter sequence itself
// and size is the length. The alphabet must be given in increasing letter
// order so that the declared order and key order agree.

// Concatenation with subword decomposition.
Rule make_free_rule(const std::string& alphabet);

// Non-decreasing words, concatenation-and-reorder with subword decomposition.
Rule make_symmetric_rule(const std::string& alphabet);

// Order-preserving interleavings with suffix/prefix deconcatenation.
Rule make_shuffle_rule(const std::string& alphabet);

// The free rule over one letter: the algebra of polynomials in one variable.
Rule make_polynomial_rule(const std::string& alphabet = "x");

}  // namespace hopf::instances

#endif  // HOPF_INSTANCES_WORDS_HPP
