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

#ifndef HOPF_AXIOMLAB_HPP
#define HOPF_AXIOMLAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/rule.hpp"

namespace hopf::axiomlab {

enum class Verdict { kHolds, kFails, kBudgetExceeded };

const char* verdict_name(Verdict v);

// Replayable witness: the objects of the failing case plus both sides.
struct Counterexample {
  std::vector<ObjectKey> objects;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Report {
  std::string rule;
  std::string condition;
  Verdict verdict = Verdict::kHolds;
  std::uint64_t cases = 0;
  double wall_ms = 0.0;
  std::optional<Counterexample> counterexample;
  std::vector<Report> parts;  // sub-reports of aggregate checks

  // {rule, condition, verdict, cases, counterexample?} plus wall time and,
  // for aggregates, the parts array.
  std::string to_json() const;
};

// Every basis object of size <= bound, duplicate-free, ascending (size, key),
// Ø included.
struct Domain {
  std::string rule_name;
  std::uint64_t bound = 0;
  std::vector<ObjectKey> objects;

  static Domain enumerate(const Rule& rule, std::uint64_t bound);
};

struct CheckOptions {
  bool parallel = true;                  // serial path is the test reference
  std::uint64_t budget = 1'000'000;      // per-case enumeration budget
};

// Verifies one declared-or-not condition exhaustively over the domain.
// Cases run in increasing size order and the sweep stops at the first
// failure, so counterexamples are minimal; verdicts and counterexamples are
// identical between the serial and parallel paths.
Report check_condition(const Rule& rule, Cond cond, const Domain& dom,
                       const CheckOptions& opts = {});

// Bialgebra morphism laws, the antipode axiom (both sides), agreement of the
// two antipode algorithms, the counit law, and involution where commutativity
// or cocommutativity is declared. Returns an aggregate with one part per law.
// Requires C1-C3, D1-D3, CD1 and D5.
Report check_hopf(const Rule& rule, const Domain& dom, const CheckOptions& opts = {});

}  // namespace hopf::axiomlab

#endif  // HOPF_AXIOMLAB_HPP
