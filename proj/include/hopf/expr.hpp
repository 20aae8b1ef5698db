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

#ifndef HOPF_EXPR_HPP
#define HOPF_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "hopf/element.hpp"
#include "hopf/hopf.hpp"
#include "hopf/rule.hpp"

namespace hopf::expr {

// AST over object literals, rational scalars, `+`/`-`, `*`, the tensor
// operator `(x)`, and delta/eps/S/grade. Object literals are resolved to
// canonical keys at parse time.
struct Expression {
  enum class Op {
    kLiteral,  // key
    kScalar,   // value
    kAdd,
    kSub,
    kNeg,
    kMul,      // product, or component-wise on tensor values
    kTensor,   // a (x) b
    kDelta,
    kEps,
    kAntipode,
    kGrade,    // grade(e, n)
  };

  Op op;
  ObjectKey key;
  Rational value;
  std::uint64_t grade = 0;
  std::vector<Expression> args;
};

// Evaluation result: a scalar, an element of the algebra, or a tensor.
// Scalars embed into either algebra as multiples of Ø when mixed.
struct Value {
  enum class Kind { kScalar, kElement, kTensor };
  Kind kind = Kind::kScalar;
  Rational scalar;
  Element element;
  TensorElement tensor;

  static Value of(Rational q) {
    Value v;
    v.kind = Kind::kScalar;
    v.scalar = std::move(q);
    return v;
  }
  static Value of(Element e) {
    Value v;
    v.kind = Kind::kElement;
    v.element = std::move(e);
    return v;
  }
  static Value of(TensorElement t) {
    Value v;
    v.kind = Kind::kTensor;
    v.tensor = std::move(t);
    return v;
  }
};

// LL(1) recursive descent over the token stream; ParseError carries
// line:column positions.
Expression parse_expression(const std::string& text, const Rule& rule);

Value evaluate(const Rule& rule, const Expression& e, AntipodeMemo* memo = nullptr);

// Prints so that re-parsing yields an equal value.
std::string value_to_string(const Rule& rule, const Value& v);

// Equality up to the scalar embedding c ↦ c·Ø.
bool value_equal(const Rule& rule, const Value& a, const Value& b);

}  // namespace hopf::expr

#endif  // HOPF_EXPR_HPP
