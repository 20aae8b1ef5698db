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

#include "hopf/instances/forest.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace hopf::instances {

namespace {

struct Tree {
  std::vector<Tree> children;
};

ObjectKey tree_key(const Tree& t) {
  std::vector<ObjectKey> kids;
  kids.reserve(t.children.size());
  for (const Tree& c : t.children) kids.push_back(tree_key(c));
  std::sort(kids.begin(), kids.end());
  ObjectKey out = "[";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out.push_back(',');
    out += kids[i];
  }
  out.push_back(']');
  return out;
}

// Parses one tree key starting at `i`; throws MalformedObject on bad input.
Tree parse_tree_key(const ObjectKey& key, std::size_t& i) {
  if (i >= key.size() || key[i] != '[')
    throw MalformedObject("bad forest key '" + key + "'");
  ++i;
  Tree t;
  if (i < key.size() && key[i] == ']') {
    ++i;
    return t;
  }
  while (true) {
    t.children.push_back(parse_tree_key(key, i));
    if (i < key.size() && key[i] == ',') {
      ++i;
      continue;
    }
    if (i < key.size() && key[i] == ']') {
      ++i;
      return t;
    }
    throw MalformedObject("bad forest key '" + key + "'");
  }
}

std::vector<Tree> parse_forest_key(const ObjectKey& key) {
  std::vector<Tree> trees;
  if (key.empty()) return trees;
  std::size_t i = 0;
  while (true) {
    trees.push_back(parse_tree_key(key, i));
    if (i == key.size()) return trees;
    if (key[i] != ',') throw MalformedObject("bad forest key '" + key + "'");
    ++i;
  }
}

ObjectKey join_keys(std::vector<ObjectKey> keys) {
  std::sort(keys.begin(), keys.end());
  ObjectKey out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out.push_back(',');
    out += keys[i];
  }
  return out;
}

// Union of two canonical forest keys.
ObjectKey forest_union(const ObjectKey& a, const ObjectKey& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<ObjectKey> trees = forest_key_trees(a);
  for (ObjectKey& t : forest_key_trees(b)) trees.push_back(std::move(t));
  return join_keys(std::move(trees));
}

// All (cut branches, rooted part) splittings of one tree. The rooted part is
// a proper subtree (possibly Ø); multiplicities count vertex subsets.
Multiset<KeyPair> tree_splits(const Tree& t) {
  Multiset<KeyPair>::Builder out;
  out.add(KeyPair(tree_key(t), kVoidKey));

  // Keep the root and choose independently inside every child; a child whose
  // chosen part is Ø is cut off whole at its root edge.
  Multiset<KeyPair> acc = Multiset<KeyPair>::single(KeyPair(kVoidKey, kVoidKey));
  for (const Tree& c : t.children) {
    Multiset<KeyPair> cs = tree_splits(c);
    Multiset<KeyPair>::Builder next;
    for (const auto& [state, m] : acc)
      for (const auto& [cut, k] : cs) {
        ObjectKey comp = forest_union(state.first, cut.first);
        ObjectKey kids = cut.second.empty() ? state.second
                                            : forest_union(state.second, cut.second);
        next.add(KeyPair(std::move(comp), std::move(kids)), m * k);
      }
    acc = next.build();
  }
  for (const auto& [state, m] : acc)
    out.add(KeyPair(state.first, "[" + state.second + "]"), m);
  return out.build();
}

void validate_forest_key(const ObjectKey& key) {
  std::vector<Tree> trees = parse_forest_key(key);
  std::vector<ObjectKey> keys;
  keys.reserve(trees.size());
  for (const Tree& t : trees) keys.push_back(tree_key(t));
  if (join_keys(std::move(keys)) != key)
    throw MalformedObject("forest key '" + key + "' is not in canonical form");
}

Multiset<KeyPair> forest_decompose(const ObjectKey& key) {
  Multiset<KeyPair> acc = Multiset<KeyPair>::single(KeyPair(kVoidKey, kVoidKey));
  for (const Tree& t : parse_forest_key(key)) {
    Multiset<KeyPair> cs = tree_splits(t);
    Multiset<KeyPair>::Builder next;
    for (const auto& [state, m] : acc)
      for (const auto& [cut, k] : cs) {
        ObjectKey comp = forest_union(state.first, cut.first);
        ObjectKey rooted = cut.second.empty() ? state.second
                                              : forest_union(state.second, cut.second);
        next.add(KeyPair(std::move(comp), std::move(rooted)), m * k);
      }
    acc = next.build();
  }
  return acc;
}

ObjectKey parse_forest_literal(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) { return ParseError(what, 1, i + 1); };

  // t(child,child,...); t() is a leaf.
  auto parse_tree = [&](auto&& self) -> Tree {
    skip_ws();
    if (i >= text.size() || text[i] != 't') throw fail("expected tree literal t(...)");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw fail("expected '(' after 't'");
    ++i;
    Tree t;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      return t;
    }
    while (true) {
      t.children.push_back(self(self));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        return t;
      }
      throw fail("expected ',' or ')' in tree literal");
    }
  };

  skip_ws();
  if (text.compare(i, 4, "void") == 0) {
    i += 4;
    skip_ws();
    if (i != text.size()) throw fail("trailing input after void");
    return kVoidKey;
  }
  std::vector<ObjectKey> keys;
  if (i < text.size() && text[i] == 'f') {
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw fail("expected '[' after 'f'");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        keys.push_back(tree_key(parse_tree(parse_tree)));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw fail("expected ',' or ']' in forest literal");
      }
    }
  } else if (i < text.size() && text[i] == 't') {
    keys.push_back(tree_key(parse_tree(parse_tree)));
  } else {
    throw fail("expected forest literal f[...], tree literal t(...) or void");
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing input after forest literal");
  return join_keys(std::move(keys));
}

std::string print_tree_key(const ObjectKey& key, std::size_t& i) {
  // `key[i]` is '['; mirror the bracket structure as t(...).
  ++i;
  std::string out = "t(";
  bool first = true;
  while (key[i] != ']') {
    if (!first) out.push_back(',');
    first = false;
    out += print_tree_key(key, i);
    if (key[i] == ',') ++i;
  }
  ++i;
  out.push_back(')');
  return out;
}

std::string print_forest(const ObjectKey& key) {
  if (key.empty()) return "void";
  std::string out = "f[";
  std::size_t i = 0;
  bool first = true;
  while (i < key.size()) {
    if (!first) out.push_back(',');
    first = false;
    out += print_tree_key(key, i);
    if (i < key.size() && key[i] == ',') ++i;
  }
  out.push_back(']');
  return out;
}

std::uint64_t forest_size(const ObjectKey& key) {
  return static_cast<std::uint64_t>(std::count(key.begin(), key.end(), '['));
}

std::vector<ObjectKey> enumerate_forests(std::uint64_t bound) {
  // Canonical trees stratified by vertex count.
  std::vector<std::vector<ObjectKey>> trees(bound + 1);
  std::vector<std::pair<ObjectKey, std::uint64_t>> pool;  // (tree key, size)
  for (std::uint64_t n = 1; n <= bound; ++n) {
    std::vector<ObjectKey> kids;
    std::vector<ObjectKey> found;
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> void {
      if (left == 0) {
        std::vector<ObjectKey> sorted = kids;
        found.push_back("[" + join_keys(std::move(sorted)) + "]");
        return;
      }
      for (std::size_t p = from; p < pool.size(); ++p) {
        if (pool[p].second > left) continue;
        kids.push_back(pool[p].first);
        self(self, p, left - pool[p].second);
        kids.pop_back();
      }
    };
    rec(rec, 0, n - 1);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    trees[n] = found;
    for (const ObjectKey& k : found) pool.emplace_back(k, n);
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
  }

  std::vector<ObjectKey> out{kVoidKey};
  std::vector<ObjectKey> parts;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> void {
    if (!parts.empty()) out.push_back(join_keys(parts));
    for (std::size_t p = from; p < pool.size(); ++p) {
      if (pool[p].second > left) continue;
      parts.push_back(pool[p].first);
      self(self, p, left - pool[p].second);
      parts.pop_back();
    }
  };
  rec(rec, 0, bound);

  std::sort(out.begin(), out.end(), [](const ObjectKey& a, const ObjectKey& b) {
    auto sa = forest_size(a), sb = forest_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ObjectKey> forest_key_trees(const ObjectKey& key) {
  std::vector<ObjectKey> out;
  if (key.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == '[') ++depth;
    if (key[i] == ']') --depth;
    if (key[i] == ',' && depth == 0) {
      out.push_back(key.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(key.substr(start));
  return out;
}

ObjectKey forest_key_from_trees(std::vector<ObjectKey> trees) {
  return join_keys(std::move(trees));
}

Rule make_forest_rule() {
  Rule r;
  r.name = "forest";
  r.declared = {Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::D1, Cond::D2,
                Cond::D3, Cond::D5, Cond::CD1, Cond::CD2};
  r.validate_fn = [](const ObjectKey& k) { validate_forest_key(k); };
  r.compose_fn = [](const ObjectKey& g2, const ObjectKey& g1) {
    return Multiset<ObjectKey>::single(forest_union(g2, g1));
  };
  r.decompose_fn = [](const ObjectKey& g) { return forest_decompose(g); };
  r.size_fn = [](const ObjectKey& g) { return forest_size(g); };
  r.parse_fn = [](const std::string& text) { return parse_forest_literal(text); };
  r.print_fn = [](const ObjectKey& g) { return print_forest(g); };
  r.enumerate_fn = [](std::uint64_t bound) { return enumerate_forests(bound); };
  return r;
}

}  // namespace hopf::instances
