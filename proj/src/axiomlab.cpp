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

#include "hopf/axiomlab.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>

#include "hopf/hopf.hpp"
#include "hopf/render.hpp"

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopf::axiomlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string Report::to_json() const {
  using nlohmann::json;
  std::function<json(const Report&)> conv = [&](const Report& r) {
    json j{{"rule", r.rule},
           {"condition", r.condition},
           {"verdict", verdict_name(r.verdict)},
           {"cases", r.cases},
           {"wall_ms", r.wall_ms}};
    if (r.counterexample) {
      const Counterexample& cx = *r.counterexample;
      json o = json::array();
      for (const ObjectKey& k : cx.objects) o.push_back(k);
      j["counterexample"] = {{"objects", o}, {"lhs", cx.lhs}, {"rhs", cx.rhs}};
      if (!cx.note.empty()) j["counterexample"]["note"] = cx.note;
    }
    if (!r.parts.empty()) {
      json parts = json::array();
      for (const Report& p : r.parts) parts.push_back(conv(p));
      j["parts"] = parts;
    }
    return j;
  };
  return conv(*this).dump();
}

Domain Domain::enumerate(const Rule& rule, std::uint64_t bound) {
  if (!rule.enumerate_fn)
    throw Error("rule '" + rule.name + "' has no basis enumerator");
  Domain dom;
  dom.rule_name = rule.name;
  dom.bound = bound;
  dom.objects = rule.enumerate_fn(bound);

  std::set<ObjectKey> seen(dom.objects.begin(), dom.objects.end());
  if (seen.size() != dom.objects.size())
    throw Error("basis enumeration contains duplicates");
  if (!seen.count(rule.neutral)) throw Error("basis enumeration is missing Ø");
  for (const ObjectKey& k : dom.objects)
    if (rule.size_fn(k) > bound) throw Error("basis object exceeds the bound");
  return dom;
}

namespace {

struct CaseFailure {
  Verdict verdict = Verdict::kFails;
  Counterexample cx;
};

struct SweepOutcome {
  Verdict verdict = Verdict::kHolds;
  std::uint64_t cases = 0;
  std::optional<Counterexample> counterexample;
};

using CaseFn = std::function<std::optional<CaseFailure>(std::size_t)>;

// Deterministic first-failure sweep. The parallel path walks fixed-size
// blocks in order and keeps the least failing index inside a block, so its
// outcome (including the counterexample) matches the serial reference.
SweepOutcome run_sweep(std::size_t ncases, const CaseFn& fn, bool parallel) {
#ifdef _OPENMP
  if (parallel && ncases > 1) {
    constexpr std::size_t kBlock = 512;
    for (std::size_t base = 0; base < ncases; base += kBlock) {
      const std::size_t hi = std::min(ncases, base + kBlock);
      std::size_t best_idx = hi;
      CaseFailure best;
      std::exception_ptr error = nullptr;
#pragma omp parallel
      {
        std::size_t my_idx = hi;
        CaseFailure my;
#pragma omp for schedule(dynamic, 4) nowait
        for (long long i = static_cast<long long>(base); i < static_cast<long long>(hi);
             ++i) {
          try {
            std::optional<CaseFailure> f = fn(static_cast<std::size_t>(i));
            if (f && static_cast<std::size_t>(i) < my_idx) {
              my_idx = static_cast<std::size_t>(i);
              my = std::move(*f);
            }
          } catch (...) {
#pragma omp critical(hopf_sweep_error)
            if (!error) error = std::current_exception();
          }
        }
#pragma omp critical(hopf_sweep_best)
        if (my_idx < best_idx) {
          best_idx = my_idx;
          best = std::move(my);
        }
      }
      if (error) std::rethrow_exception(error);
      if (best_idx < hi)
        return {best.verdict, best_idx + 1, std::move(best.cx)};
    }
    return {Verdict::kHolds, ncases, std::nullopt};
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < ncases; ++i) {
    std::optional<CaseFailure> f = fn(i);
    if (f) return {f->verdict, i + 1, std::move(f->cx)};
  }
  return {Verdict::kHolds, ncases, std::nullopt};
}

// One verification case: up to three domain indices.
struct Case {
  std::array<std::uint32_t, 3> idx{};
  std::uint8_t arity = 1;
};

class Sweeper {
 public:
  Sweeper(const Rule& rule, const Domain& dom, const CheckOptions& opts)
      : rule_(rule), dom_(dom), opts_(opts) {
    sizes_.reserve(dom.objects.size());
    for (const ObjectKey& k : dom.objects) sizes_.push_back(rule.size_fn(k));
  }

  const Rule& rule() const { return rule_; }
  const Domain& dom() const { return dom_; }
  const CheckOptions& opts() const { return opts_; }
  const ObjectKey& obj(std::uint32_t i) const { return dom_.objects[i]; }

  std::vector<Case> unary_cases() const {
    std::vector<Case> cases(dom_.objects.size());
    for (std::uint32_t i = 0; i < cases.size(); ++i) cases[i] = {{i, 0, 0}, 1};
    return sorted(std::move(cases));
  }

  std::vector<Case> pair_cases(bool unordered = false) const {
    const std::uint32_t n = static_cast<std::uint32_t>(dom_.objects.size());
    std::vector<Case> cases;
    cases.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = unordered ? i : 0; j < n; ++j)
        cases.push_back({{i, j, 0}, 2});
    return sorted(std::move(cases));
  }

  std::vector<Case> triple_cases() const {
    const std::uint32_t n = static_cast<std::uint32_t>(dom_.objects.size());
    std::vector<Case> cases;
    cases.reserve(static_cast<std::size_t>(n) * n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t k = 0; k < n; ++k) cases.push_back({{i, j, k}, 3});
    return sorted(std::move(cases));
  }

  std::uint64_t total_size(const Case& c) const {
    std::uint64_t s = 0;
    for (std::uint8_t a = 0; a < c.arity; ++a) s += sizes_[c.idx[a]];
    return s;
  }

  std::vector<ObjectKey> case_objects(const Case& c) const {
    std::vector<ObjectKey> out;
    for (std::uint8_t a = 0; a < c.arity; ++a) out.push_back(obj(c.idx[a]));
    return out;
  }

  Report run(const char* condition, const std::vector<Case>& cases,
             const std::function<std::optional<CaseFailure>(const Case&)>& kernel) const {
    const auto start = std::chrono::steady_clock::now();
    SweepOutcome outcome = run_sweep(
        cases.size(),
        [&](std::size_t i) {
          try {
            return kernel(cases[i]);
          } catch (const BudgetExceeded& e) {
            CaseFailure f;
            f.verdict = Verdict::kBudgetExceeded;
            f.cx = Counterexample{case_objects(cases[i]), "", "", e.what()};
            return std::optional<CaseFailure>(std::move(f));
          }
        },
        opts_.parallel);
    const auto stop = std::chrono::steady_clock::now();

    Report r;
    r.rule = rule_.name;
    r.condition = condition;
    r.verdict = outcome.verdict;
    r.cases = outcome.cases;
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    r.counterexample = std::move(outcome.counterexample);
    return r;
  }

 private:
  std::vector<Case> sorted(std::vector<Case> cases) const {
    std::stable_sort(cases.begin(), cases.end(), [&](const Case& a, const Case& b) {
      return total_size(a) < total_size(b);
    });
    return cases;
  }

  const Rule& rule_;
  const Domain& dom_;
  const CheckOptions& opts_;
  std::vector<std::uint64_t> sizes_;
};

// Pairwise composition table shared read-only across worker threads.
class PairTable {
 public:
  PairTable(const Rule& rule, const Domain& dom) : n_(dom.objects.size()) {
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        table_[i * n_ + j] = compose(rule, dom.objects[i], dom.objects[j]);
  }
  const Multiset<ObjectKey>& at(std::uint32_t i, std::uint32_t j) const {
    return table_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<Multiset<ObjectKey>> table_;
};

std::optional<CaseFailure> fail_case(const Sweeper& sw, const Case& c, std::string lhs,
                                     std::string rhs, std::string note = {}) {
  CaseFailure f;
  f.cx = Counterexample{sw.case_objects(c), std::move(lhs), std::move(rhs),
                        std::move(note)};
  return f;
}

Report check_c1(const Sweeper& sw) {
  return sw.run("C1", sw.pair_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<ObjectKey> m = compose(sw.rule(), sw.obj(c.idx[0]), sw.obj(c.idx[1]));
    if (m.cardinality() > sw.opts().budget) {
      CaseFailure f;
      f.verdict = Verdict::kBudgetExceeded;
      f.cx = Counterexample{sw.case_objects(c), "", "",
                            "composition multiset exceeds budget"};
      return f;
    }
    return std::nullopt;
  });
}

Report check_c2(const Sweeper& sw) {
  PairTable pairs(sw.rule(), sw.dom());
  return sw.run("C2", sw.triple_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<ObjectKey> lhs = compose_msets(
        sw.rule(), Multiset<ObjectKey>::single(sw.obj(c.idx[0])), pairs.at(c.idx[1], c.idx[2]));
    const Multiset<ObjectKey> rhs = compose_msets(
        sw.rule(), pairs.at(c.idx[0], c.idx[1]), Multiset<ObjectKey>::single(sw.obj(c.idx[2])));
    if (lhs == rhs) return std::nullopt;
    return fail_case(sw, c, multiset_to_string(sw.rule(), lhs),
                     multiset_to_string(sw.rule(), rhs),
                     "triple compositions disagree");
  });
}

Report check_c3(const Sweeper& sw) {
  return sw.run("C3", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const ObjectKey& g = sw.obj(c.idx[0]);
    const Multiset<ObjectKey> expected = Multiset<ObjectKey>::single(g);
    const Multiset<ObjectKey> left = compose(sw.rule(), sw.rule().neutral, g);
    if (left != expected)
      return fail_case(sw, c, multiset_to_string(sw.rule(), left),
                       multiset_to_string(sw.rule(), expected), "Ø ◁ Γ is not {Γ}");
    const Multiset<ObjectKey> right = compose(sw.rule(), g, sw.rule().neutral);
    if (right != expected)
      return fail_case(sw, c, multiset_to_string(sw.rule(), right),
                       multiset_to_string(sw.rule(), expected), "Γ ◁ Ø is not {Γ}");
    return std::nullopt;
  });
}

Report check_c4(const Sweeper& sw) {
  return sw.run("C4", sw.pair_cases(/*unordered=*/true),
                [&](const Case& c) -> std::optional<CaseFailure> {
                  const Multiset<ObjectKey> ab =
                      compose(sw.rule(), sw.obj(c.idx[0]), sw.obj(c.idx[1]));
                  const Multiset<ObjectKey> ba =
                      compose(sw.rule(), sw.obj(c.idx[1]), sw.obj(c.idx[0]));
                  if (ab == ba) return std::nullopt;
                  return fail_case(sw, c, multiset_to_string(sw.rule(), ab),
                                   multiset_to_string(sw.rule(), ba),
                                   "composition is not commutative");
                });
}

Report check_d1(const Sweeper& sw) {
  return sw.run("D1", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<KeyPair> m = decompose(sw.rule(), sw.obj(c.idx[0]));
    if (m.cardinality() > sw.opts().budget) {
      CaseFailure f;
      f.verdict = Verdict::kBudgetExceeded;
      f.cx = Counterexample{sw.case_objects(c), "", "",
                            "decomposition multiset exceeds budget"};
      return f;
    }
    return std::nullopt;
  });
}

Report check_d2(const Sweeper& sw) {
  return sw.run("D2", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<KeyPair> d = decompose(sw.rule(), sw.obj(c.idx[0]));
    Multiset<KeyTuple>::Builder left, right;
    for (const auto& [pair, m] : d) {
      for (const auto& [inner, k] : decompose(sw.rule(), pair.first))
        left.add(KeyTuple{inner.first, inner.second, pair.second}, m * k);
      for (const auto& [inner, k] : decompose(sw.rule(), pair.second))
        right.add(KeyTuple{pair.first, inner.first, inner.second}, m * k);
    }
    const Multiset<KeyTuple> l = left.build(), r = right.build();
    if (l == r) return std::nullopt;
    return fail_case(sw, c, multiset_to_string(sw.rule(), l),
                     multiset_to_string(sw.rule(), r),
                     "triple decompositions disagree");
  });
}

Report check_d3(const Sweeper& sw) {
  return sw.run("D3", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const ObjectKey& g = sw.obj(c.idx[0]);
    const ObjectKey& v = sw.rule().neutral;
    const Multiset<KeyPair> d = decompose(sw.rule(), g);
    if (g == v) {
      const Multiset<KeyPair> expected = Multiset<KeyPair>::single(KeyPair(v, v));
      if (d != expected)
        return fail_case(sw, c, multiset_to_string(sw.rule(), d),
                         multiset_to_string(sw.rule(), expected),
                         "Ø must decompose as (Ø,Ø) only");
      return std::nullopt;
    }
    // Exactly the two trivial splittings may involve Ø or Γ itself.
    for (const auto& [pair, m] : d) {
      const bool trivial = (pair.first == v && pair.second == g) ||
                           (pair.first == g && pair.second == v);
      const bool touches = pair.first == v || pair.second == v || pair.first == g ||
                           pair.second == g;
      if (trivial && m != 1)
        return fail_case(sw, c, multiset_to_string(sw.rule(), d),
                         "trivial splittings with multiplicity 1",
                         "trivial splitting has multiplicity " + to_string(m));
      if (!trivial && touches)
        return fail_case(sw, c, multiset_to_string(sw.rule(), d),
                         "no non-trivial splitting involving Ø or Γ",
                         "unexpected splitting involving Ø or Γ");
    }
    if (d.multiplicity(KeyPair(v, g)) != 1 || d.multiplicity(KeyPair(g, v)) != 1)
      return fail_case(sw, c, multiset_to_string(sw.rule(), d),
                       "both (Ø,Γ) and (Γ,Ø) present once",
                       "missing trivial splitting");
    return std::nullopt;
  });
}

Report check_d4(const Sweeper& sw) {
  return sw.run("D4", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<KeyPair> d = decompose(sw.rule(), sw.obj(c.idx[0]));
    Multiset<KeyPair>::Builder swapped_b;
    for (const auto& [pair, m] : d) swapped_b.add(KeyPair(pair.second, pair.first), m);
    const Multiset<KeyPair> swapped = swapped_b.build();
    if (d == swapped) return std::nullopt;
    return fail_case(sw, c, multiset_to_string(sw.rule(), d),
                     multiset_to_string(sw.rule(), swapped),
                     "decomposition is not symmetric");
  });
}

Report check_d5(const Sweeper& sw) {
  if (!sw.rule().declared.has(Cond::CD2)) {
    // Without size compatibility there is no a-priori bound on the
    // termination index; report budget-exceeded instead of inferring one.
    Report r;
    r.rule = sw.rule().name;
    r.condition = "D5";
    r.verdict = Verdict::kBudgetExceeded;
    r.counterexample = Counterexample{
        {}, "", "", "no termination bound without CD2; not verified"};
    return r;
  }
  return sw.run("D5", sw.unary_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const ObjectKey& g = sw.obj(c.idx[0]);
    EnumBudget guard{sw.opts().budget};
    const std::uint64_t parts = sw.rule().size_fn(g) + 1;
    const Multiset<KeyTuple> nt = detail::nontrivial_splittings(sw.rule(), g, parts, &guard);
    if (nt.empty()) return std::nullopt;
    return fail_case(sw, c, multiset_to_string(sw.rule(), nt), "{}",
                     "Ø-free splittings into size+1 parts exist");
  });
}

Report check_cd1(const Sweeper& sw) {
  PairTable pairs(sw.rule(), sw.dom());
  return sw.run("CD1", sw.pair_cases(), [&](const Case& c) -> std::optional<CaseFailure> {
    const Multiset<KeyPair> lhs = decompose_msets(sw.rule(), pairs.at(c.idx[0], c.idx[1]));
    Multiset<KeyPair>::Builder rhs_b;
    const Multiset<KeyPair> d2 = decompose(sw.rule(), sw.obj(c.idx[0]));
    const Multiset<KeyPair> d1 = decompose(sw.rule(), sw.obj(c.idx[1]));
    for (const auto& [p2, m2] : d2)
      for (const auto& [p1, m1] : d1)
        rhs_b.add(mprod(compose(sw.rule(), p2.first, p1.first),
                        compose(sw.rule(), p2.second, p1.second)),
                  m2 * m1);
    const Multiset<KeyPair> rhs = rhs_b.build();
    if (lhs == rhs) return std::nullopt;
    return fail_case(sw, c, multiset_to_string(sw.rule(), lhs),
                     multiset_to_string(sw.rule(), rhs),
                     "decomposing compositions disagrees with composing decompositions");
  });
}

Report check_cd2(const Sweeper& sw) {
  // Pair cases check the composition side, unary cases the decomposition
  // side plus uniqueness of the size-0 object.
  std::vector<Case> cases = sw.pair_cases();
  std::vector<Case> singles = sw.unary_cases();
  cases.insert(cases.end(), singles.begin(), singles.end());
  return sw.run("CD2", cases, [&](const Case& c) -> std::optional<CaseFailure> {
    if (c.arity == 2) {
      const ObjectKey& g2 = sw.obj(c.idx[0]);
      const ObjectKey& g1 = sw.obj(c.idx[1]);
      const std::uint64_t want = sw.rule().size_fn(g2) + sw.rule().size_fn(g1);
      for (const auto& [g, m] : compose(sw.rule(), g2, g1))
        if (sw.rule().size_fn(g) != want)
          return fail_case(sw, c, "|" + g + "| = " + std::to_string(sw.rule().size_fn(g)),
                           "expected size " + std::to_string(want),
                           "composition does not preserve size");
      return std::nullopt;
    }
    const ObjectKey& g = sw.obj(c.idx[0]);
    const std::uint64_t size = sw.rule().size_fn(g);
    if (g == sw.rule().neutral && size != 0)
      return fail_case(sw, c, std::to_string(size), "0", "Ø must have size 0");
    if (g != sw.rule().neutral && size == 0)
      return fail_case(sw, c, "0", ">= 1", "Ø is not the unique size-0 object");
    for (const auto& [pair, m] : decompose(sw.rule(), g)) {
      const std::uint64_t split =
          sw.rule().size_fn(pair.first) + sw.rule().size_fn(pair.second);
      if (split != size)
        return fail_case(sw, c, std::to_string(split), std::to_string(size),
                         "splitting does not preserve size");
    }
    return std::nullopt;
  });
}

}  // namespace

Report check_condition(const Rule& rule, Cond cond, const Domain& dom,
                       const CheckOptions& opts) {
  Sweeper sw(rule, dom, opts);
  switch (cond) {
    case Cond::C1: return check_c1(sw);
    case Cond::C2: return check_c2(sw);
    case Cond::C3: return check_c3(sw);
    case Cond::C4: return check_c4(sw);
    case Cond::D1: return check_d1(sw);
    case Cond::D2: return check_d2(sw);
    case Cond::D3: return check_d3(sw);
    case Cond::D4: return check_d4(sw);
    case Cond::D5: return check_d5(sw);
    case Cond::CD1: return check_cd1(sw);
    case Cond::CD2: return check_cd2(sw);
  }
  throw Error("unknown condition");
}

namespace {

Element hopf_antipode_side(const Rule& rule, const Multiset<KeyPair>& delta,
                           AntipodeMemo* memo, bool s_on_right) {
  Element acc;
  for (const auto& [pair, m] : delta) {
    Element term = s_on_right
                       ? mul(rule, Element::basis(pair.first),
                             antipode_rec(rule, pair.second, memo))
                       : mul(rule, antipode_rec(rule, pair.first, memo),
                             Element::basis(pair.second));
    acc = add(acc, scale(Rational(m), term));
  }
  return acc;
}

}  // namespace

Report check_hopf(const Rule& rule, const Domain& dom, const CheckOptions& opts) {
  for (Cond c : {Cond::C1, Cond::C2, Cond::C3, Cond::D1, Cond::D2, Cond::D3, Cond::CD1,
                 Cond::D5})
    rule.require(c, "check_hopf");

  Sweeper sw(rule, dom, opts);
  AntipodeMemo memo(rule.name);
  std::vector<Report> parts;

  parts.push_back(sw.run("hopf:antipode-axiom", sw.unary_cases(),
                         [&](const Case& c) -> std::optional<CaseFailure> {
                           const ObjectKey& g = sw.obj(c.idx[0]);
                           const Multiset<KeyPair> delta = decompose(rule, g);
                           const Element expected =
                               counit_projection(rule, Element::basis(g));
                           const Element left =
                               hopf_antipode_side(rule, delta, &memo, true);
                           if (left != expected)
                             return fail_case(sw, c, element_to_string(rule, left),
                                              element_to_string(rule, expected),
                                              "μ∘(Id⊗S)∘Δ differs from ε·Ø");
                           const Element right =
                               hopf_antipode_side(rule, delta, &memo, false);
                           if (right != expected)
                             return fail_case(sw, c, element_to_string(rule, right),
                                              element_to_string(rule, expected),
                                              "μ∘(S⊗Id)∘Δ differs from ε·Ø");
                           return std::nullopt;
                         }));

  parts.push_back(sw.run(
      "hopf:bialgebra-morphism", sw.pair_cases(),
      [&](const Case& c) -> std::optional<CaseFailure> {
        const Element x2 = Element::basis(sw.obj(c.idx[0]));
        const Element x1 = Element::basis(sw.obj(c.idx[1]));
        const TensorElement lhs = coproduct(rule, mul(rule, x2, x1));
        const TensorElement rhs =
            mul_tensor(rule, coproduct(rule, x2), coproduct(rule, x1));
        if (lhs != rhs)
          return fail_case(sw, c, tensor_to_string(rule, lhs), tensor_to_string(rule, rhs),
                           "Δ does not preserve multiplication");
        const Rational el = counit(rule, mul(rule, x2, x1));
        const Rational er = counit(rule, x2) * counit(rule, x1);
        if (el != er)
          return fail_case(sw, c, to_string(el), to_string(er),
                           "ε does not preserve multiplication");
        return std::nullopt;
      }));

  parts.push_back(sw.run("hopf:antipode-agreement", sw.unary_cases(),
                         [&](const Case& c) -> std::optional<CaseFailure> {
                           const ObjectKey& g = sw.obj(c.idx[0]);
                           const Element via_sum = antipode_sum(rule, g, opts.budget);
                           const Element via_rec = antipode_rec(rule, g, &memo);
                           if (via_sum == via_rec) return std::nullopt;
                           return fail_case(sw, c, element_to_string(rule, via_sum),
                                            element_to_string(rule, via_rec),
                                            "antipode algorithms disagree");
                         }));

  parts.push_back(sw.run("hopf:counit-law", sw.unary_cases(),
                         [&](const Case& c) -> std::optional<CaseFailure> {
                           const ObjectKey& g = sw.obj(c.idx[0]);
                           Element left, right;
                           for (const auto& [pair, m] : decompose(rule, g)) {
                             if (pair.first == rule.neutral)
                               left.add_term(pair.second, Rational(m));
                             if (pair.second == rule.neutral)
                               right.add_term(pair.first, Rational(m));
                           }
                           const Element expected = Element::basis(g);
                           if (left != expected)
                             return fail_case(sw, c, element_to_string(rule, left),
                                              element_to_string(rule, expected),
                                              "(ε⊗Id)∘Δ is not the identity");
                           if (right != expected)
                             return fail_case(sw, c, element_to_string(rule, right),
                                              element_to_string(rule, expected),
                                              "(Id⊗ε)∘Δ is not the identity");
                           return std::nullopt;
                         }));

  if (rule.declared.has(Cond::C4) || rule.declared.has(Cond::D4)) {
    parts.push_back(sw.run("hopf:involution", sw.unary_cases(),
                           [&](const Case& c) -> std::optional<CaseFailure> {
                             const ObjectKey& g = sw.obj(c.idx[0]);
                             const Element once = antipode_rec(rule, g, &memo);
                             const Element twice = antipode(rule, once, &memo);
                             if (twice == Element::basis(g)) return std::nullopt;
                             return fail_case(sw, c, element_to_string(rule, twice),
                                              element_to_string(rule, Element::basis(g)),
                                              "S∘S is not the identity");
                           }));
  }

  Report agg;
  agg.rule = rule.name;
  agg.condition = "hopf";
  for (const Report& p : parts) {
    agg.cases += p.cases;
    agg.wall_ms += p.wall_ms;
    if (p.verdict != Verdict::kHolds && agg.verdict == Verdict::kHolds) {
      agg.verdict = p.verdict;
      agg.counterexample = p.counterexample;
    }
    if (p.verdict == Verdict::kFails && agg.verdict == Verdict::kBudgetExceeded) {
      agg.verdict = Verdict::kFails;
      agg.counterexample = p.counterexample;
    }
  }
  agg.parts = std::move(parts);
  return agg;
}

}  // namespace hopf::axiomlab
