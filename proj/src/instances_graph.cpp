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

#include "hopf/instances/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace hopf::instances {

namespace {

constexpr std::size_t kMaxComponentVertices = 9;
constexpr std::size_t kMaxDecomposeEdges = 20;

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Lexicographically least relabeled edge list over all permutations of the
// component's vertices. Brute force; components stay small by construction.
EdgeList canonical_component(const EdgeList& edges) {
  std::vector<int> verts;
  for (auto [a, b] : edges) {
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const std::size_t n = verts.size();
  if (n > kMaxComponentVertices)
    throw BudgetExceeded("graph component with " + std::to_string(n) +
                         " vertices exceeds the canonicalization bound");

  std::map<int, int> index;
  for (std::size_t i = 0; i < n; ++i) index[verts[i]] = static_cast<int>(i);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  EdgeList best;
  EdgeList cur(edges.size());
  do {
    for (std::size_t i = 0; i < edges.size(); ++i)
      cur[i] = norm_edge(perm[index[edges[i].first]], perm[index[edges[i].second]]);
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<EdgeList> split_components(const EdgeList& edges) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent[v] = v;
      return v;
    }
    if (it->second == v) return v;
    return it->second = find(it->second);
  };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
  std::map<int, EdgeList> buckets;
  for (auto [a, b] : edges) buckets[find(a)].push_back(norm_edge(a, b));
  std::vector<EdgeList> out;
  out.reserve(buckets.size());
  for (auto& [root, es] : buckets) out.push_back(std::move(es));
  return out;
}

std::size_t vertex_count(const EdgeList& edges) {
  std::set<int> verts;
  for (auto [a, b] : edges) {
    verts.insert(a);
    verts.insert(b);
  }
  return verts.size();
}

std::string render_edges(const EdgeList& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(edges[i].first);
    out.push_back('-');
    out += std::to_string(edges[i].second);
  }
  return out;
}

}  // namespace

ObjectKey graph_canonical_key(const EdgeList& edges) {
  if (edges.empty()) return kVoidKey;
  std::vector<EdgeList> comps = split_components(edges);
  for (EdgeList& c : comps) c = canonical_component(c);
  std::sort(comps.begin(), comps.end());

  EdgeList assembled;
  int offset = 0;
  for (const EdgeList& c : comps) {
    for (auto [a, b] : c) assembled.emplace_back(a + offset, b + offset);
    offset += static_cast<int>(vertex_count(c));
  }
  return render_edges(assembled);
}

EdgeList graph_edges_from_key(const ObjectKey& key) {
  EdgeList edges;
  if (key.empty()) return edges;
  std::size_t i = 0;
  auto number = [&]() {
    if (i >= key.size() || !std::isdigit(static_cast<unsigned char>(key[i])))
      throw MalformedObject("bad graph key '" + key + "'");
    int v = 0;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) {
      v = v * 10 + (key[i] - '0');
      ++i;
    }
    if (v <= 0) throw MalformedObject("graph vertex labels must be positive");
    return v;
  };
  while (true) {
    int a = number();
    if (i >= key.size() || key[i] != '-')
      throw MalformedObject("bad graph key '" + key + "'");
    ++i;
    int b = number();
    edges.emplace_back(a, b);
    if (i == key.size()) break;
    if (key[i] != ',') throw MalformedObject("bad graph key '" + key + "'");
    ++i;
  }
  return edges;
}

namespace {

void validate_graph_key(const ObjectKey& key) {
  if (key.empty()) return;
  EdgeList edges = graph_edges_from_key(key);
  if (graph_canonical_key(edges) != key)
    throw MalformedObject("graph key '" + key + "' is not in canonical form");
}

Multiset<KeyPair> graph_decompose(const ObjectKey& key) {
  const EdgeList edges = graph_edges_from_key(key);
  const std::size_t e = edges.size();
  if (e > kMaxDecomposeEdges)
    throw BudgetExceeded("graph with " + std::to_string(e) +
                         " edges has too many edge partitions");
  Multiset<KeyPair>::Builder out;
  out.reserve(std::size_t{1} << e);
  EdgeList left, right;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < e; ++i)
      (mask >> i & 1 ? left : right).push_back(edges[i]);
    out.add(KeyPair(graph_canonical_key(left), graph_canonical_key(right)));
  }
  return out.build();
}

ObjectKey graph_compose_keys(const ObjectKey& g2, const ObjectKey& g1) {
  if (g2.empty()) return g1;
  if (g1.empty()) return g2;
  EdgeList edges = graph_edges_from_key(g2);
  int offset = 0;
  for (auto [a, b] : edges) offset = std::max(offset, b);
  for (auto [a, b] : graph_edges_from_key(g1))
    edges.emplace_back(a + offset, b + offset);
  return graph_canonical_key(edges);
}

ObjectKey parse_graph_literal(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) { return ParseError(what, 1, i + 1); };
  skip_ws();
  if (text.compare(i, 4, "void") == 0) {
    i += 4;
    skip_ws();
    if (i != text.size()) throw fail("trailing input after void");
    return kVoidKey;
  }
  if (i >= text.size() || text[i] != 'g') throw fail("expected graph literal g{...} or void");
  ++i;
  if (i >= text.size() || text[i] != '{') throw fail("expected '{' after 'g'");
  ++i;
  auto number = [&]() {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw fail("expected a vertex label");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw fail("vertex label too large");
      ++i;
    }
    if (v <= 0) throw fail("vertex labels must be positive");
    return static_cast<int>(v);
  };
  EdgeList edges;
  skip_ws();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    while (true) {
      int a = number();
      skip_ws();
      if (i >= text.size() || text[i] != '-') throw fail("expected '-' in edge");
      ++i;
      int b = number();
      edges.emplace_back(a, b);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw fail("expected ',' or '}' in graph literal");
    }
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing input after graph literal");
  return graph_canonical_key(edges);
}

// All connected multigraph classes with exactly `e` edges.
std::vector<ObjectKey> connected_graphs(std::size_t e) {
  std::set<ObjectKey> classes;
  const std::size_t max_v = e + 1;
  for (std::size_t nv = 1; nv <= max_v; ++nv) {
    EdgeList pair_types;
    for (int a = 1; a <= static_cast<int>(nv); ++a)
      for (int b = a; b <= static_cast<int>(nv); ++b) pair_types.emplace_back(a, b);
    // Multisets of e edges over the pair types.
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
      if (left == 0) {
        EdgeList edges;
        edges.reserve(e);
        for (std::size_t p : pick) edges.push_back(pair_types[p]);
        if (vertex_count(edges) != nv) return;  // isolated vertices forbidden
        if (split_components(edges).size() != 1) return;
        classes.insert(graph_canonical_key(edges));
        return;
      }
      for (std::size_t p = from; p < pair_types.size(); ++p) {
        pick.push_back(p);
        self(self, p, left - 1);
        pick.pop_back();
      }
    };
    rec(rec, 0, e);
  }
  return {classes.begin(), classes.end()};
}

std::vector<ObjectKey> enumerate_graphs(std::uint64_t bound) {
  // Connected classes per edge count, then multisets of components.
  std::vector<std::vector<ObjectKey>> connected(bound + 1);
  for (std::size_t e = 1; e <= bound; ++e) connected[e] = connected_graphs(e);

  std::vector<std::pair<ObjectKey, std::size_t>> pool;  // (component key, edges)
  for (std::size_t e = 1; e <= bound; ++e)
    for (const ObjectKey& k : connected[e]) pool.emplace_back(k, e);

  std::vector<ObjectKey> out{kVoidKey};
  std::vector<ObjectKey> parts;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> void {
    if (!parts.empty()) {
      EdgeList edges;
      for (const ObjectKey& part : parts) {
        int offset = 0;
        for (auto [a, b] : edges) offset = std::max(offset, b);
        for (auto [a, b] : graph_edges_from_key(part))
          edges.emplace_back(a + offset, b + offset);
      }
      out.push_back(graph_canonical_key(edges));
    }
    for (std::size_t p = from; p < pool.size(); ++p) {
      if (pool[p].second > left) continue;
      parts.push_back(pool[p].first);
      self(self, p, left - pool[p].second);
      parts.pop_back();
    }
  };
  rec(rec, 0, bound);

  std::sort(out.begin(), out.end(), [](const ObjectKey& a, const ObjectKey& b) {
    auto ea = graph_edges_from_key(a).size(), eb = graph_edges_from_key(b).size();
    return ea != eb ? ea < eb : a < b;
  });
  return out;
}

}  // namespace

Rule make_graph_rule() {
  Rule r;
  r.name = "graph";
  r.declared = {Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::D1, Cond::D2,
                Cond::D3, Cond::D4, Cond::D5, Cond::CD1, Cond::CD2};
  r.validate_fn = [](const ObjectKey& k) { validate_graph_key(k); };
  r.compose_fn = [](const ObjectKey& g2, const ObjectKey& g1) {
    return Multiset<ObjectKey>::single(graph_compose_keys(g2, g1));
  };
  r.decompose_fn = [](const ObjectKey& g) { return graph_decompose(g); };
  r.size_fn = [](const ObjectKey& g) {
    if (g.empty()) return std::uint64_t{0};
    return static_cast<std::uint64_t>(std::count(g.begin(), g.end(), '-'));
  };
  r.parse_fn = [](const std::string& text) { return parse_graph_literal(text); };
  r.print_fn = [](const ObjectKey& g) {
    return g.empty() ? std::string("void") : "g{" + g + "}";
  };
  r.enumerate_fn = [](std::uint64_t bound) { return enumerate_graphs(bound); };
  return r;
}

}  // namespace hopf::instances
