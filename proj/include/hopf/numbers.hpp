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

#ifndef HOPF_NUMBERS_HPP
#define HOPF_NUMBERS_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopf {

// Multiset multiplicities. Shuffle counts grow combinatorially, so these are
// arbitrary precision; values are kept non-negative by construction.
using Nat = boost::multiprecision::cpp_int;

// Exact rational scalars, always in reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", with "/q" omitted when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Nat& n) { return n.str(); }

Rational rational_from_string(const std::string& text);

}  // namespace hopf

#endif  // HOPF_NUMBERS_HPP
