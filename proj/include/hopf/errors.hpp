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

#ifndef HOPF_ERRORS_HPP
#define HOPF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An object key that fails the instance's validity check.
class MalformedObject : public Error {
 public:
  using Error::Error;
};

// Position-annotated error for object literals, expressions and config files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        raw_(what),
        line_(line),
        column_(column) {}
  // The message without the position suffix.
  const std::string& raw() const { return raw_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string raw_;
  std::size_t line_;
  std::size_t column_;
};

// An operation requires a condition the rule does not declare.
class ConditionNotDeclared : public Error {
 public:
  ConditionNotDeclared(const std::string& op, const std::string& cond)
      : Error(op + " requires condition " + cond + " to be declared"), cond_(cond) {}
  const std::string& condition() const { return cond_; }

 private:
  std::string cond_;
};

class UnknownInstance : public Error {
 public:
  explicit UnknownInstance(const std::string& name)
      : Error("unknown instance '" + name + "'") {}
};

class EmptyAlphabet : public Error {
 public:
  EmptyAlphabet() : Error("alphabet must contain at least one letter") {}
  using Error::Error;
};

class NotAMonoid : public Error {
 public:
  using Error::Error;
};

// Enumeration walked past its allotted budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Multi-decompositions did not die out within budget; signals a false D5 claim.
class NonTermination : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

class RecursionBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

}  // namespace hopf

#endif  // HOPF_ERRORS_HPP
