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

#include "hopf/render.hpp"

namespace hopf {

namespace {

constexpr std::size_t kMaxRenderedEntries = 32;

std::string object_literal(const Rule& rule, const ObjectKey& key) {
  return rule.print_fn ? rule.print_fn(key) : (key.empty() ? "void" : "'" + key + "'");
}

// Shared between Element and TensorElement printing.
template <class Terms, class RenderKey>
std::string render_terms(const Terms& terms, RenderKey&& render_key) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const bool negative = coeff < 0;
    if (first)
      out += negative ? "- " : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    if (mag != 1) out += to_string(mag) + " ";
    out += render_key(key);
  }
  return out;
}

}  // namespace

std::string element_to_string(const Rule& rule, const Element& x) {
  return render_terms(x.terms(),
                      [&](const ObjectKey& k) { return object_literal(rule, k); });
}

std::string tensor_to_string(const Rule& rule, const TensorElement& x) {
  return render_terms(x.terms(), [&](const KeyPair& p) {
    return object_literal(rule, p.first) + " (x) " + object_literal(rule, p.second);
  });
}

namespace {

template <class T, class RenderOne>
std::string render_multiset(const Multiset<T>& m, RenderOne&& render_one) {
  std::string out = "{";
  std::size_t shown = 0;
  for (const auto& [value, count] : m) {
    if (shown++) out += ", ";
    if (shown > kMaxRenderedEntries) {
      out += "...";
      break;
    }
    if (count != 1) out += to_string(count) + "*";
    out += render_one(value);
  }
  out += "}";
  return out;
}

}  // namespace

std::string multiset_to_string(const Rule& rule, const Multiset<ObjectKey>& m) {
  return render_multiset(m, [&](const ObjectKey& k) { return object_literal(rule, k); });
}

std::string multiset_to_string(const Rule& rule, const Multiset<KeyPair>& m) {
  return render_multiset(m, [&](const KeyPair& p) {
    return "(" + object_literal(rule, p.first) + ", " + object_literal(rule, p.second) + ")";
  });
}

std::string multiset_to_string(const Rule& rule, const Multiset<KeyTuple>& m) {
  return render_multiset(m, [&](const KeyTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ", ";
      out += object_literal(rule, t[i]);
    }
    return out + ")";
  });
}

}  // namespace hopf
