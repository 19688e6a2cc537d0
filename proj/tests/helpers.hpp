// Test-side oracles and utilities, written independently of the library
// internals they check.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "linecover/graph.hpp"
#include "linecover/orientations.hpp"

namespace testutil {

using linecover::Edge;
using linecover::Graph;

// ---- isomorphism by brute-force canonical form (n <= 8) ----

inline std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool have = false;
  do {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      int a = perm[e.u], b = perm[e.v];
      if (a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = std::move(mapped);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// ---- graph enumeration and shaping ----

// all 2^C(n,2) labeled graphs on exactly n vertices
inline std::vector<Graph> labeled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const long long total = 1ll << slots.size();
  out.reserve(static_cast<size_t>(total));
  for (long long mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (mask & (1ll << i)) edges.push_back({slots[i].first, slots[i].second});
    }
    out.push_back(Graph::build(n, std::move(edges)));
  }
  return out;
}

// drop the lexicographically largest edge of each triangle until none remain
inline Graph make_triangle_free(Graph g) {
  while (true) {
    bool changed = false;
    for (int u = 0; u < g.vertex_count() && !changed; ++u) {
      for (int v = u + 1; v < g.vertex_count() && !changed; ++v) {
        if (!g.adjacent(u, v)) continue;
        for (int w = v + 1; w < g.vertex_count() && !changed; ++w) {
          if (g.adjacent(u, w) && g.adjacent(v, w)) {
            std::vector<Edge> edges;
            for (const Edge& e : g.edges()) {
              if (!(e.u == v && e.v == w)) edges.push_back(e);
            }
            g = Graph::build(g.vertex_count(), std::move(edges));
            changed = true;
          }
        }
      }
    }
    if (!changed) return g;
  }
}

// ---- independent order-family predicates (plain position loops) ----

inline std::vector<std::vector<int>> position_tables(int C,
                                                     const std::vector<std::vector<int>>& orders) {
  std::vector<std::vector<int>> pos;
  for (const auto& ord : orders) {
    std::vector<int> p(C, -1);
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) p[ord[i]] = i;
    pos.push_back(std::move(p));
  }
  return pos;
}

inline bool oracle_suitable(int C, const std::vector<std::vector<int>>& orders) {
  if (C <= 2) return true;
  auto pos = position_tables(C, orders);
  for (int a = 0; a < C; ++a) {
    for (int b = 0; b < C; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < C; ++c) {
        if (c == a) continue;
        bool ok = false;
        for (const auto& p : pos) {
          if (p[a] > p[b] && p[a] > p[c]) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

inline bool oracle_mixing(int C, const std::vector<std::vector<int>>& orders) {
  if (C <= 2) return true;
  auto pos = position_tables(C, orders);
  for (int a = 0; a < C; ++a) {
    for (int b = 0; b < C; ++b) {
      if (b == a) continue;
      for (int c = b + 1; c < C; ++c) {
        if (c == a) continue;
        bool ok = false;
        for (const auto& p : pos) {
          bool before = p[a] < p[b] && p[a] < p[c];
          bool after = p[a] > p[b] && p[a] > p[c];
          if (before || after) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// all permutations of [0, C) in lexicographic (rank) order
inline std::vector<std::vector<int>> all_perms(int C) {
  std::vector<int> base(C);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// exhaustive minimum family over ALL rank combinations in lexicographic
// order; first hit is the globally lex-least witness; feasible for C <= 4
inline std::pair<int, std::vector<std::vector<int>>> oracle_min_family(
    int C, bool suitable) {
  auto perms = all_perms(C);
  const int P = static_cast<int>(perms.size());
  auto check = [&](const std::vector<int>& ranks) {
    std::vector<std::vector<int>> fam;
    for (int r : ranks) fam.push_back(perms[r]);
    return suitable ? oracle_suitable(C, fam) : oracle_mixing(C, fam);
  };
  for (int k = 1; k <= P; ++k) {
    std::vector<int> ranks(k);
    std::iota(ranks.begin(), ranks.end(), 0);
    while (true) {
      if (check(ranks)) {
        std::vector<std::vector<int>> fam;
        for (int r : ranks) fam.push_back(perms[r]);
        return {k, fam};
      }
      int i = k - 1;
      while (i >= 0 && ranks[i] == P - k + i) --i;
      if (i < 0) break;
      ++ranks[i];
      for (int j = i + 1; j < k; ++j) ranks[j] = ranks[j - 1] + 1;
    }
  }
  return {0, {}};
}

// ---- independent exhaustive elbow solver (tiny graphs only) ----

inline int oracle_shared_vertex(const Edge& e, const Edge& f) {
  if (e.u == f.u || e.u == f.v) return e.u;
  if (e.v == f.u || e.v == f.v) return e.v;
  return -1;
}

// mask bit i set = edge i directed high -> low endpoint
inline bool oracle_pair_elbows(const Graph& g, uint32_t mask, int e, int f, bool in_only) {
  const Edge& ee = g.edge(e);
  const Edge& fe = g.edge(f);
  int x = oracle_shared_vertex(ee, fe);
  int he = (mask >> e) & 1 ? ee.u : ee.v;  // head of e
  int hf = (mask >> f) & 1 ? fe.u : fe.v;
  bool toward_e = he == x, toward_f = hf == x;
  if (toward_e && toward_f) return true;
  if (!in_only && !toward_e && !toward_f) return true;
  return false;
}

// smallest k <= k_max orientations covering every adjacent pair, by direct
// enumeration of k-subsets of all 2^m orientations; m <= 5
inline std::optional<int> oracle_exact_cover(const Graph& g, bool in_only, int k_max) {
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (oracle_shared_vertex(g.edge(e), g.edge(f)) >= 0) pairs.emplace_back(e, f);
    }
  }
  if (pairs.empty()) return 0;
  const uint32_t total = 1u << g.edge_count();
  std::vector<uint32_t> covers(total, 0);  // bitset over pairs, <= 32 pairs
  for (uint32_t mask = 0; mask < total; ++mask) {
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (oracle_pair_elbows(g, mask, pairs[p].first, pairs[p].second, in_only)) {
        covers[mask] |= 1u << p;
      }
    }
  }
  const uint32_t all = pairs.size() == 32 ? ~0u : (1u << pairs.size()) - 1;
  std::vector<uint32_t> chosen;
  auto rec = [&](auto&& self, uint32_t covered, uint32_t start, int left) -> bool {
    if (covered == all) return true;
    if (left == 0) return false;
    for (uint32_t m = start; m < total; ++m) {
      if (self(self, covered | covers[m], m + 1, left - 1)) return true;
    }
    return false;
  };
  for (int k = 1; k <= k_max; ++k) {
    if (rec(rec, 0, 0, k)) return k;
  }
  return std::nullopt;
}

}  // namespace testutil
