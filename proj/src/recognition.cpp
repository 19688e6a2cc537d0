#include "linecover/recognition.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "linecover/errors.hpp"

namespace linecover {

std::optional<PerfectEliminationOrder> find_peo(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    }
    numbered[pick] = 1;
    visit.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!numbered[w]) ++weight[w];
  }
  PerfectEliminationOrder peo;
  peo.order.assign(visit.rbegin(), visit.rend());
  if (!is_peo_valid(g, peo)) return std::nullopt;
  return peo;
}

bool is_peo_valid(const Graph& g, const PerfectEliminationOrder& peo) {
  const int n = g.vertex_count();
  if (static_cast<int>(peo.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = peo.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) return false;
    pos[v] = i;
  }
  for (int i = 0; i < n; ++i) {
    const int v = peo.order[i];
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) { return find_peo(g).has_value(); }

bool is_chordal_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw BudgetExceeded("chordal oracle budget is 8 vertices");
  // look for a vertex subset inducing a cycle of length >= 4: all induced
  // degrees exactly 2, connected, as many induced edges as vertices
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    bool degrees_ok = true;
    int edge_count = 0;
    for (int v = 0; v < n && degrees_ok; ++v) {
      if (!((mask >> v) & 1)) continue;
      int d = 0;
      for (int w : g.neighbors(v))
        if ((mask >> w) & 1) ++d;
      if (d != 2) degrees_ok = false;
      edge_count += d;
    }
    if (!degrees_ok) continue;
    edge_count /= 2;
    if (edge_count != __builtin_popcount(mask)) continue;
    // connected?
    int start = __builtin_ctz(mask);
    unsigned seen = 1u << start;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (((mask >> w) & 1) && !((seen >> w) & 1)) {
          seen |= 1u << w;
          q.push(w);
        }
      }
    }
    if (seen == mask) return false;  // induced cycle of length >= 4
  }
  return true;
}

namespace {

// component labels of G minus the closed neighborhood of c; -1 inside N[c]
std::vector<int> components_avoiding(const Graph& g, int c) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<char> banned(n, 0);
  banned[c] = 1;
  for (int w : g.neighbors(c)) banned[w] = 1;
  int label = 0;
  for (int s = 0; s < n; ++s) {
    if (banned[s] || comp[s] >= 0) continue;
    comp[s] = label;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (!banned[w] && comp[w] < 0) {
          comp[w] = label;
          q.push(w);
        }
      }
    }
    ++label;
  }
  return comp;
}

}  // namespace

bool is_interval(const Graph& g) {
  if (!is_chordal(g)) return false;
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comp(n);
  for (int c = 0; c < n; ++c) comp[c] = components_avoiding(g, c);
  // asteroidal triple: pairwise connected while avoiding the third's N[.]
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        bool ab = comp[c][a] >= 0 && comp[c][a] == comp[c][b];
        bool ac = comp[b][a] >= 0 && comp[b][a] == comp[b][c];
        bool bc = comp[a][b] >= 0 && comp[a][b] == comp[a][c];
        if (ab && ac && bc) return false;
      }
    }
  }
  return true;
}

namespace {

// brute-force interval model search over endpoint-event sequences
struct IntervalSearch {
  const Graph& g;
  int n;
  unsigned open = 0, closed = 0;
  std::vector<int> met;
  std::unordered_set<uint64_t> failed;

  explicit IntervalSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), met(graph.vertex_count(), 0) {}

  uint64_t key() const {
    uint64_t k = open | (static_cast<uint64_t>(closed) << 7);
    for (int v = 0; v < n; ++v) {
      uint64_t m = ((open >> v) & 1) ? static_cast<uint64_t>(met[v]) : 0;
      k |= m << (14 + 3 * v);
    }
    return k;
  }

  bool dfs() {
    if (__builtin_popcount(closed) == n) return true;
    uint64_t k = key();
    if (failed.count(k)) return false;
    // close any open interval whose neighbors were all met
    for (int v = 0; v < n; ++v) {
      if (!((open >> v) & 1)) continue;
      if (met[v] != g.degree(v)) continue;
      open &= ~(1u << v);
      closed |= 1u << v;
      if (dfs()) return true;
      closed &= ~(1u << v);
      open |= 1u << v;
    }
    // open a fresh interval; everything currently open must be adjacent to it
    for (int v = 0; v < n; ++v) {
      if (((open | closed) >> v) & 1) continue;
      bool ok = true;
      unsigned cur = open;
      while (cur) {
        int u = __builtin_ctz(cur);
        cur &= cur - 1;
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      int gained = __builtin_popcount(open);
      cur = open;
      while (cur) {
        int u = __builtin_ctz(cur);
        cur &= cur - 1;
        ++met[u];
      }
      met[v] = gained;
      open |= 1u << v;
      if (dfs()) return true;
      open &= ~(1u << v);
      met[v] = 0;
      cur = open;
      while (cur) {
        int u = __builtin_ctz(cur);
        cur &= cur - 1;
        --met[u];
      }
    }
    failed.insert(k);
    return false;
  }
};

}  // namespace

bool is_interval_oracle(const Graph& g) {
  if (g.vertex_count() > 7) throw BudgetExceeded("interval oracle budget is 7 vertices");
  if (g.vertex_count() == 0) return true;
  IntervalSearch search(g);
  return search.dfs();
}

bool is_equivalence_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int label = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = label;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = label;
          q.push(w);
        }
      }
    }
    ++label;
  }
  std::vector<long long> size(label, 0), edges(label, 0);
  for (int v = 0; v < n; ++v) ++size[comp[v]];
  for (const Edge& e : g.edges()) ++edges[comp[e.u]];
  for (int c = 0; c < label; ++c)
    if (edges[c] != size[c] * (size[c] - 1) / 2) return false;
  return true;
}

std::string cover_class_name(CoverClass c) {
  switch (c) {
    case CoverClass::equivalence: return "equivalence";
    case CoverClass::interval: return "interval";
    case CoverClass::chordal: return "chordal";
    case CoverClass::elbow_orientation_derived: return "elbow-orientation-derived";
    case CoverClass::unrestricted: return "unrestricted";
  }
  throw std::logic_error("unreachable cover class");
}

CoverClass cover_class_from_name(const std::string& name) {
  if (name == "equivalence") return CoverClass::equivalence;
  if (name == "interval") return CoverClass::interval;
  if (name == "chordal") return CoverClass::chordal;
  if (name == "elbow-orientation-derived") return CoverClass::elbow_orientation_derived;
  if (name == "unrestricted") return CoverClass::unrestricted;
  throw ParseError("unknown cover class: " + name);
}

Graph member_graph(const Cover& c, int i) {
  std::vector<Edge> edges;
  for (int idx : c.members[i]) edges.push_back(c.target.edge(idx));
  return Graph::build(c.target.vertex_count(), std::move(edges), /*dedupe=*/true);
}

CoverReport cover_verify(const Cover& c) {
  CoverReport report;
  report.size = static_cast<int>(c.members.size());
  const int m = c.target.edge_count();
  std::vector<char> covered(m, 0);
  for (int i = 0; i < report.size; ++i) {
    std::vector<int> idxs = c.members[i];
    std::sort(idxs.begin(), idxs.end());
    bool malformed = false;
    for (size_t a = 0; a < idxs.size(); ++a) {
      if (idxs[a] < 0 || idxs[a] >= m || (a > 0 && idxs[a] == idxs[a - 1])) {
        malformed = true;
        break;
      }
    }
    if (malformed) {
      report.malformed_members.push_back(i);
      continue;
    }
    for (int idx : idxs) covered[idx] = 1;
    bool class_ok = true;
    switch (c.claimed_class) {
      case CoverClass::equivalence:
        class_ok = is_equivalence_graph(member_graph(c, i));
        break;
      case CoverClass::interval:
        class_ok = is_interval(member_graph(c, i));
        break;
      case CoverClass::chordal:
        class_ok = is_chordal(member_graph(c, i));
        break;
      case CoverClass::elbow_orientation_derived:
      case CoverClass::unrestricted:
        break;  // union and well-formedness checks only
    }
    if (!class_ok) report.failed_members.push_back(i);
  }
  for (int e = 0; e < m; ++e)
    if (!covered[e]) report.missing_edges.push_back(e);
  report.union_ok = report.missing_edges.empty();
  return report;
}

}  // namespace linecover
