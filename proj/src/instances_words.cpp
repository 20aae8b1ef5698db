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

#include "hopf/instances/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace hopf::instances {

namespace {

// Subword decompositions enumerate 2^len masks; keep that sane.
constexpr std::uint64_t kMaxSubsetLen = 22;
constexpr std::uint64_t kMaxBasisSize = 1u << 22;

struct Alphabet {
  std::string letters;
  bool member[256] = {false};

  explicit Alphabet(const std::string& ls) : letters(ls) {
    if (ls.empty()) throw EmptyAlphabet();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(ls[i]);
      if (!std::isalnum(c))
        throw Error("alphabet letters must be alphanumeric");
      if (i > 0 && !(ls[i - 1] < ls[i]))
        throw Error("alphabet letters must be distinct and in increasing order");
      member[c] = true;
    }
  }

  bool contains(char c) const { return member[static_cast<unsigned char>(c)]; }
};

void validate_word(const Alphabet& a, const ObjectKey& w, bool sorted) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!a.contains(w[i]))
      throw MalformedObject("letter '" + std::string(1, w[i]) + "' is not in the alphabet");
    if (sorted && i > 0 && w[i] < w[i - 1])
      throw MalformedObject("ordered word has letters out of order: '" + w + "'");
  }
}

// All (subword, remainder) splittings, one per position subset.
Multiset<KeyPair> subword_decompose(const ObjectKey& w) {
  const std::size_t k = w.size();
  if (k > kMaxSubsetLen)
    throw BudgetExceeded("word of length " + std::to_string(k) +
                         " has too many subword decompositions");
  Multiset<KeyPair>::Builder out;
  out.reserve(std::size_t{1} << k);
  std::string sub, rest;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    sub.clear();
    rest.clear();
    for (std::size_t i = 0; i < k; ++i)
      (mask >> i & 1 ? sub : rest).push_back(w[i]);
    out.add(KeyPair(sub, rest));
  }
  return out.build();
}

// C(n, k) saturating at `cap`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - k + i) / i;
  }
  return r;
}

// Every order-preserving interleaving of a and b, counted per merge path.
Multiset<ObjectKey> shuffle_words(const ObjectKey& a, const ObjectKey& b) {
  const std::size_t m = a.size(), n = b.size();
  if (binomial_capped(m + n, m, kMaxBasisSize) > kMaxBasisSize)
    throw BudgetExceeded("shuffle of lengths " + std::to_string(m) + " and " +
                         std::to_string(n) + " is too large to enumerate");
  Multiset<ObjectKey>::Builder out;
  std::string buf(m + n, '\0');
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == m && j == n) {
      out.add(buf);
      return;
    }
    if (i < m) {
      buf[i + j] = a[i];
      self(self, i + 1, j);
    }
    if (j < n) {
      buf[i + j] = b[j];
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out.build();
}

ObjectKey parse_word_literal(const Alphabet& a, const std::string& text, bool sort) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what, 1, i + 1);
  };
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.compare(i, 4, "void") == 0) {
    i += 4;
  } else if (i < text.size() && text[i] == 'w') {
    ++i;
    if (i >= text.size() || text[i] != '"') throw fail("expected '\"' after 'w'");
    ++i;
    std::string letters;
    while (i < text.size() && text[i] != '"') {
      if (!a.contains(text[i])) throw fail("letter not in alphabet");
      letters.push_back(text[i]);
      ++i;
    }
    if (i >= text.size()) throw fail("unterminated word literal");
    ++i;
    if (sort) std::sort(letters.begin(), letters.end());
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) throw fail("trailing input after word literal");
    return letters;
  } else {
    throw fail("expected word literal w\"...\" or void");
  }
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) throw fail("trailing input after void");
  return kVoidKey;
}

std::string print_word(const ObjectKey& w) {
  return w.empty() ? "void" : "w\"" + w + "\"";
}

// All words of length <= bound, ascending by (size, key). When `sorted` only
// non-decreasing words are produced.
std::vector<ObjectKey> enumerate_words(const Alphabet& a, std::uint64_t bound, bool sorted) {
  std::vector<ObjectKey> out{kVoidKey};
  std::vector<ObjectKey> level{kVoidKey};
  for (std::uint64_t len = 1; len <= bound; ++len) {
    std::vector<ObjectKey> next;
    for (const ObjectKey& w : level)
      for (char c : a.letters) {
        if (sorted && !w.empty() && c < w.back()) continue;
        next.push_back(w + c);
        if (out.size() + next.size() > kMaxBasisSize)
          throw BudgetExceeded("word basis exceeds enumeration budget");
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

Rule make_word_rule(std::string name, const std::string& letters, bool sorted,
                    CondSet declared) {
  auto alpha = std::make_shared<const Alphabet>(letters);
  Rule r;
  r.name = std::move(name);
  r.declared = declared;
  r.validate_fn = [alpha, sorted](const ObjectKey& w) { validate_word(*alpha, w, sorted); };
  if (sorted) {
    r.compose_fn = [](const ObjectKey& g2, const ObjectKey& g1) {
      ObjectKey w = g2 + g1;
      std::sort(w.begin(), w.end());
      return Multiset<ObjectKey>::single(std::move(w));
    };
  } else {
    r.compose_fn = [](const ObjectKey& g2, const ObjectKey& g1) {
      return Multiset<ObjectKey>::single(g2 + g1);
    };
  }
  r.decompose_fn = [](const ObjectKey& w) { return subword_decompose(w); };
  r.size_fn = [](const ObjectKey& w) { return static_cast<std::uint64_t>(w.size()); };
  r.parse_fn = [alpha, sorted](const std::string& text) {
    return parse_word_literal(*alpha, text, sorted);
  };
  r.print_fn = [](const ObjectKey& w) { return print_word(w); };
  r.enumerate_fn = [alpha, sorted](std::uint64_t bound) {
    return enumerate_words(*alpha, bound, sorted);
  };
  return r;
}

}  // namespace

Rule make_free_rule(const std::string& alphabet) {
  return make_word_rule("free", alphabet, false,
                        {Cond::C1, Cond::C2, Cond::C3, Cond::D1, Cond::D2, Cond::D3,
                         Cond::D4, Cond::D5, Cond::CD1, Cond::CD2});
}

Rule make_symmetric_rule(const std::string& alphabet) {
  return make_word_rule("symmetric", alphabet, true,
                        {Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::D1, Cond::D2,
                         Cond::D3, Cond::D4, Cond::D5, Cond::CD1, Cond::CD2});
}

Rule make_shuffle_rule(const std::string& alphabet) {
  Rule r = make_word_rule("shuffle", alphabet, false,
                          {Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::D1, Cond::D2,
                           Cond::D3, Cond::D5, Cond::CD1, Cond::CD2});
  r.compose_fn = [](const ObjectKey& g2, const ObjectKey& g1) {
    return shuffle_words(g2, g1);
  };
  r.decompose_fn = [](const ObjectKey& w) {
    Multiset<KeyPair>::Builder out;
    for (std::size_t j = 0; j <= w.size(); ++j)
      out.add(KeyPair(w.substr(j), w.substr(0, j)));
    return out.build();
  };
  return r;
}

Rule make_polynomial_rule(const std::string& alphabet) {
  if (alphabet.size() != 1)
    throw Error("the polynomial instance takes a single-letter alphabet");
  Rule r = make_word_rule("polynomial", alphabet, false,
                          {Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::D1, Cond::D2,
                           Cond::D3, Cond::D4, Cond::D5, Cond::CD1, Cond::CD2});
  return r;
}

}  // namespace hopf::instances
