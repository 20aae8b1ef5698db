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

#include "hopf/expr.hpp"

#include <cctype>

#include "hopf/render.hpp"

namespace hopf::expr {

namespace {

struct Token {
  enum class Kind {
    kNumber,    // 12 or 12/7
    kLiteral,   // w"..." g{...} t(...) f[...] void
    kIdent,     // delta eps S grade
    kPlus,
    kMinus,
    kStar,
    kTensorOp,  // (x)
    kLParen,
    kRParen,
    kComma,
    kEnd,
  };
  Kind kind;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ParseError(what, at.line, at.column);
  }

 private:
  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

  void bump() {
    if (at(pos_) == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (std::isspace(static_cast<unsigned char>(at(pos_)))) bump();
  }

  Token make(Token::Kind kind, std::size_t start_line, std::size_t start_col,
             std::string text) {
    return Token{kind, std::move(text), start_line, start_col};
  }

  // Consumes a bracketed literal body with the given open/close pair.
  void scan_balanced(char open, char close) {
    int depth = 0;
    while (true) {
      char c = at(pos_);
      if (c == '\0')
        throw ParseError(std::string("unterminated '") + open + "' literal", line_, col_);
      if (c == open) ++depth;
      if (c == close) {
        --depth;
        bump();
        if (depth == 0) return;
        continue;
      }
      bump();
    }
  }

  void advance() {
    skip_ws();
    const std::size_t line = line_, col = col_;
    const char c = at(pos_);
    if (c == '\0') {
      current_ = make(Token::Kind::kEnd, line, col, "");
      return;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(at(pos_)))) bump();
      if (at(pos_) == '/' && std::isdigit(static_cast<unsigned char>(at(pos_ + 1)))) {
        bump();
        while (std::isdigit(static_cast<unsigned char>(at(pos_)))) bump();
      }
      current_ = make(Token::Kind::kNumber, line, col, text_.substr(start, pos_ - start));
      return;
    }

    // Object literals.
    if (c == 'w' && at(pos_ + 1) == '"') {
      std::size_t start = pos_;
      bump();
      bump();
      while (at(pos_) != '"') {
        if (at(pos_) == '\0') throw ParseError("unterminated word literal", line, col);
        bump();
      }
      bump();
      current_ = make(Token::Kind::kLiteral, line, col, text_.substr(start, pos_ - start));
      return;
    }
    if (c == 'g' && at(pos_ + 1) == '{') {
      std::size_t start = pos_;
      bump();
      scan_balanced('{', '}');
      current_ = make(Token::Kind::kLiteral, line, col, text_.substr(start, pos_ - start));
      return;
    }
    if (c == 't' && at(pos_ + 1) == '(') {
      std::size_t start = pos_;
      bump();
      scan_balanced('(', ')');
      current_ = make(Token::Kind::kLiteral, line, col, text_.substr(start, pos_ - start));
      return;
    }
    if (c == 'f' && at(pos_ + 1) == '[') {
      std::size_t start = pos_;
      bump();
      scan_balanced('[', ']');
      current_ = make(Token::Kind::kLiteral, line, col, text_.substr(start, pos_ - start));
      return;
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(at(pos_)))) bump();
      std::string word = text_.substr(start, pos_ - start);
      if (word == "void") {
        current_ = make(Token::Kind::kLiteral, line, col, std::move(word));
      } else {
        current_ = make(Token::Kind::kIdent, line, col, std::move(word));
      }
      return;
    }

    if (c == '(') {
      if (at(pos_ + 1) == 'x' && at(pos_ + 2) == ')') {
        bump();
        bump();
        bump();
        current_ = make(Token::Kind::kTensorOp, line, col, "(x)");
        return;
      }
      bump();
      current_ = make(Token::Kind::kLParen, line, col, "(");
      return;
    }

    switch (c) {
      case '+': bump(); current_ = make(Token::Kind::kPlus, line, col, "+"); return;
      case '-': bump(); current_ = make(Token::Kind::kMinus, line, col, "-"); return;
      case '*': bump(); current_ = make(Token::Kind::kStar, line, col, "*"); return;
      case ')': bump(); current_ = make(Token::Kind::kRParen, line, col, ")"); return;
      case ',': bump(); current_ = make(Token::Kind::kComma, line, col, ","); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token current_{Token::Kind::kEnd, "", 1, 1};
};

class Parser {
 public:
  Parser(const std::string& text, const Rule& rule) : lex_(text), rule_(rule) {}

  Expression parse() {
    Expression e = parse_expr();
    if (lex_.peek().kind != Token::Kind::kEnd)
      lex_.fail(lex_.peek(), "trailing input after expression");
    return e;
  }

 private:
  bool starts_atom(const Token& t) const {
    switch (t.kind) {
      case Token::Kind::kNumber:
      case Token::Kind::kLiteral:
      case Token::Kind::kIdent:
      case Token::Kind::kLParen:
        return true;
      default:
        return false;
    }
  }

  Expression parse_expr() {
    bool negate = false;
    if (lex_.peek().kind == Token::Kind::kMinus) {
      lex_.take();
      negate = true;
    }
    Expression acc = parse_chain();
    if (negate) acc = Expression{Expression::Op::kNeg, {}, {}, 0, {std::move(acc)}};
    while (lex_.peek().kind == Token::Kind::kPlus ||
           lex_.peek().kind == Token::Kind::kMinus) {
      const bool minus = lex_.take().kind == Token::Kind::kMinus;
      Expression rhs = parse_chain();
      acc = Expression{minus ? Expression::Op::kSub : Expression::Op::kAdd,
                       {},
                       {},
                       0,
                       {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  Expression parse_chain() {
    Expression acc = parse_atom();
    while (true) {
      if (lex_.peek().kind == Token::Kind::kStar) {
        lex_.take();
        Expression rhs = parse_atom();
        acc = Expression{Expression::Op::kMul, {}, {}, 0, {std::move(acc), std::move(rhs)}};
      } else if (lex_.peek().kind == Token::Kind::kTensorOp) {
        lex_.take();
        Expression rhs = parse_atom();
        acc = Expression{Expression::Op::kTensor, {}, {}, 0, {std::move(acc), std::move(rhs)}};
      } else {
        return acc;
      }
    }
  }

  Expression parse_atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::kNumber: {
        Expression num{Expression::Op::kScalar, {}, rational_from_string(t.text), 0, {}};
        // A juxtaposed atom is a scalar coefficient: "2/3 w"a"".
        if (starts_atom(lex_.peek()) && lex_.peek().kind != Token::Kind::kNumber) {
          Expression body = parse_atom();
          return Expression{Expression::Op::kMul, {}, {}, 0, {std::move(num), std::move(body)}};
        }
        return num;
      }
      case Token::Kind::kLiteral: {
        try {
          ObjectKey key = rule_.parse_fn ? rule_.parse_fn(t.text) : t.text;
          return Expression{Expression::Op::kLiteral, std::move(key), {}, 0, {}};
        } catch (const ParseError& e) {
          // Rebase the literal-local position onto the token position.
          throw ParseError(e.raw(), t.line, t.column + e.column() - 1);
        }
      }
      case Token::Kind::kIdent: {
        Expression::Op op;
        if (t.text == "delta")
          op = Expression::Op::kDelta;
        else if (t.text == "eps")
          op = Expression::Op::kEps;
        else if (t.text == "S")
          op = Expression::Op::kAntipode;
        else if (t.text == "grade")
          op = Expression::Op::kGrade;
        else
          lex_.fail(t, "unknown function '" + t.text + "'");
        expect(Token::Kind::kLParen, "expected '('");
        Expression arg = parse_expr();
        Expression out{op, {}, {}, 0, {std::move(arg)}};
        if (op == Expression::Op::kGrade) {
          expect(Token::Kind::kComma, "expected ',' in grade(e, n)");
          const Token n = lex_.take();
          if (n.kind != Token::Kind::kNumber || n.text.find('/') != std::string::npos)
            lex_.fail(n, "expected a natural number grade");
          out.grade = std::stoull(n.text);
        }
        expect(Token::Kind::kRParen, "expected ')'");
        return out;
      }
      case Token::Kind::kLParen: {
        Expression inner = parse_expr();
        expect(Token::Kind::kRParen, "expected ')'");
        return inner;
      }
      default:
        lex_.fail(t, "expected an object literal, number, function or '('");
    }
  }

  void expect(Token::Kind kind, const std::string& what) {
    const Token t = lex_.take();
    if (t.kind != kind) lex_.fail(t, what);
  }

  Lexer lex_;
  const Rule& rule_;
};

Element as_element(const Rule& rule, const Value& v, const char* where) {
  switch (v.kind) {
    case Value::Kind::kScalar: return Element::basis(rule.neutral, v.scalar);
    case Value::Kind::kElement: return v.element;
    case Value::Kind::kTensor: throw Error(std::string(where) + ": expected an element, got a tensor");
  }
  throw Error("bad value");
}

TensorElement as_tensor(const Rule& rule, const Value& v, const char* where) {
  switch (v.kind) {
    case Value::Kind::kScalar:
      return TensorElement::basis(KeyPair(rule.neutral, rule.neutral), v.scalar);
    case Value::Kind::kTensor: return v.tensor;
    case Value::Kind::kElement:
      throw Error(std::string(where) + ": expected a tensor, got an element");
  }
  throw Error("bad value");
}

Value eval_add(const Rule& rule, Value a, Value b, bool subtract) {
  if (a.kind == Value::Kind::kScalar && b.kind == Value::Kind::kScalar)
    return Value::of(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
  if (a.kind == Value::Kind::kTensor || b.kind == Value::Kind::kTensor) {
    TensorElement rhs = as_tensor(rule, b, "+");
    if (subtract) rhs = scale(-1, rhs);
    return Value::of(add(as_tensor(rule, a, "+"), rhs));
  }
  Element rhs = as_element(rule, b, "+");
  if (subtract) rhs = scale(-1, rhs);
  return Value::of(add(as_element(rule, a, "+"), rhs));
}

Value eval_mul(const Rule& rule, Value a, Value b) {
  if (a.kind == Value::Kind::kScalar && b.kind == Value::Kind::kScalar)
    return Value::of(a.scalar * b.scalar);
  if (a.kind == Value::Kind::kScalar) {
    if (b.kind == Value::Kind::kElement) return Value::of(scale(a.scalar, b.element));
    return Value::of(scale(a.scalar, b.tensor));
  }
  if (b.kind == Value::Kind::kScalar) {
    if (a.kind == Value::Kind::kElement) return Value::of(scale(b.scalar, a.element));
    return Value::of(scale(b.scalar, a.tensor));
  }
  if (a.kind == Value::Kind::kElement && b.kind == Value::Kind::kElement)
    return Value::of(mul(rule, a.element, b.element));
  if (a.kind == Value::Kind::kTensor && b.kind == Value::Kind::kTensor)
    return Value::of(mul_tensor(rule, a.tensor, b.tensor));
  throw Error("'*' cannot mix an element with a tensor");
}

}  // namespace

Expression parse_expression(const std::string& text, const Rule& rule) {
  return Parser(text, rule).parse();
}

Value evaluate(const Rule& rule, const Expression& e, AntipodeMemo* memo) {
  switch (e.op) {
    case Expression::Op::kLiteral: return Value::of(Element::basis(e.key));
    case Expression::Op::kScalar: return Value::of(e.value);
    case Expression::Op::kAdd:
      return eval_add(rule, evaluate(rule, e.args[0], memo), evaluate(rule, e.args[1], memo),
                      false);
    case Expression::Op::kSub:
      return eval_add(rule, evaluate(rule, e.args[0], memo), evaluate(rule, e.args[1], memo),
                      true);
    case Expression::Op::kNeg: {
      Value v = evaluate(rule, e.args[0], memo);
      return eval_mul(rule, Value::of(Rational(-1)), std::move(v));
    }
    case Expression::Op::kMul:
      return eval_mul(rule, evaluate(rule, e.args[0], memo), evaluate(rule, e.args[1], memo));
    case Expression::Op::kTensor: {
      Value a = evaluate(rule, e.args[0], memo);
      Value b = evaluate(rule, e.args[1], memo);
      return Value::of(tensor(as_element(rule, a, "(x)"), as_element(rule, b, "(x)")));
    }
    case Expression::Op::kDelta: {
      Value a = evaluate(rule, e.args[0], memo);
      return Value::of(coproduct(rule, as_element(rule, a, "delta")));
    }
    case Expression::Op::kEps: {
      Value a = evaluate(rule, e.args[0], memo);
      return Value::of(counit(rule, as_element(rule, a, "eps")));
    }
    case Expression::Op::kAntipode: {
      Value a = evaluate(rule, e.args[0], memo);
      AntipodeMemo local(rule.name);
      return Value::of(antipode(rule, as_element(rule, a, "S"), memo ? memo : &local));
    }
    case Expression::Op::kGrade: {
      Value a = evaluate(rule, e.args[0], memo);
      return Value::of(project_grade(rule, as_element(rule, a, "grade"), e.grade));
    }
  }
  throw Error("bad expression");
}

std::string value_to_string(const Rule& rule, const Value& v) {
  switch (v.kind) {
    case Value::Kind::kScalar: return to_string(v.scalar);
    case Value::Kind::kElement: return element_to_string(rule, v.element);
    case Value::Kind::kTensor: return tensor_to_string(rule, v.tensor);
  }
  throw Error("bad value");
}

bool value_equal(const Rule& rule, const Value& a, const Value& b) {
  if (a.kind == Value::Kind::kTensor || b.kind == Value::Kind::kTensor) {
    if (a.kind == Value::Kind::kElement || b.kind == Value::Kind::kElement) return false;
    return as_tensor(rule, a, "==") == as_tensor(rule, b, "==");
  }
  return as_element(rule, a, "==") == as_element(rule, b, "==");
}

}  // namespace hopf::expr
