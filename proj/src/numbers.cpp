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

#include "hopf/numbers.hpp"

#include <cctype>

#include "hopf/errors.hpp"

namespace hopf {

Rational rational_from_string(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](Nat* out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected digits in rational literal '" + text + "'", 1, i + 1);
    *out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      *out = *out * 10 + (text[i] - '0');
      ++i;
    }
  };
  Nat num, den = 1;
  digits(&num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    digits(&den);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'", 1, i);
  }
  if (i != text.size())
    throw ParseError("trailing input in rational literal '" + text + "'", 1, i + 1);
  Rational q(num, den);
  return negative ? -q : q;
}

}  // namespace hopf
