#include "linecover/orientations.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "linecover/errors.hpp"

namespace linecover {

bool orientation_well_formed(const Graph& g, const Orientation& o) {
  if (static_cast<int>(o.dirs.size()) != g.edge_count()) return false;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Arc& a = o.dirs[i];
    bool forward = a.tail == e.u && a.head == e.v;
    bool backward = a.tail == e.v && a.head == e.u;
    if (!forward && !backward) return false;
  }
  return true;
}

namespace {

// shared endpoint of two distinct adjacent edges, or -1
int shared_endpoint(const Edge& e, const Edge& f) {
  if (e.u == f.u || e.u == f.v) return e.u;
  if (e.v == f.u || e.v == f.v) return e.v;
  return -1;
}

}  // namespace

ElbowKind elbow_kind(const Graph& g, const Orientation& o, int e, int f) {
  if (e == f || e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count()) {
    throw std::invalid_argument("elbow_kind needs two distinct edge indices");
  }
  int x = shared_endpoint(g.edge(e), g.edge(f));
  if (x < 0) throw std::invalid_argument("elbow_kind needs adjacent edges");
  if (o.dirs[e].head == x && o.dirs[f].head == x) return ElbowKind::in_elbow;
  if (o.dirs[e].tail == x && o.dirs[f].tail == x) return ElbowKind::out_elbow;
  return ElbowKind::none;
}

std::string cover_kind_name(CoverKindClaim k) {
  switch (k) {
    case CoverKindClaim::elbow_cover: return "elbow-cover";
    case CoverKindClaim::in_elbow_cover: return "in-elbow-cover";
    case CoverKindClaim::none: return "none";
  }
  throw std::logic_error("unreachable cover kind");
}

CoverKindClaim cover_kind_from_name(const std::string& name) {
  if (name == "elbow-cover") return CoverKindClaim::elbow_cover;
  if (name == "in-elbow-cover") return CoverKindClaim::in_elbow_cover;
  if (name == "none") return CoverKindClaim::none;
  throw ParseError("unknown orientation cover kind: " + name);
}

std::vector<std::pair<int, int>> adjacent_edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (size_t a = 0; a < inc.size(); ++a)
      for (size_t b = a + 1; b < inc.size(); ++b)
        pairs.push_back({inc[a], inc[b]});
  }
  return pairs;
}

OrientationCoverReport verify_orientation_cover_report(const OrientationFamily& fam,
                                                       ElbowMode mode) {
  OrientationCoverReport report;
  for (const Orientation& o : fam.members) {
    if (!orientation_well_formed(fam.graph, o)) {
      report.pass = false;
      return report;  // malformed member: report as failing everything
    }
  }
  for (auto [e, f] : adjacent_edge_pairs(fam.graph)) {
    bool hit = false;
    for (const Orientation& o : fam.members) {
      ElbowKind kind = elbow_kind(fam.graph, o, e, f);
      if (kind == ElbowKind::in_elbow ||
          (mode == ElbowMode::elbow && kind == ElbowKind::out_elbow)) {
        hit = true;
        break;
      }
    }
    if (!hit) report.uncovered.push_back({e, f});
  }
  report.pass = report.uncovered.empty();
  return report;
}

bool verify_orientation_cover(const OrientationFamily& fam, ElbowMode mode) {
  return verify_orientation_cover_report(fam, mode).pass;
}

OrientationFamily orient_from_coloring(const Graph& g, const Coloring& c,
                                       const OrderFamily& f) {
  if (!is_proper_coloring(g, c)) {
    throw std::invalid_argument("orient_from_coloring needs a proper coloring");
  }
  if (f.universe_size < c.num_colors) {
    throw std::invalid_argument("order universe smaller than the palette");
  }
  if (!orders_well_formed(f)) {
    throw std::invalid_argument("malformed order family");
  }
  OrientationFamily fam;
  fam.graph = g;
  for (const auto& ord : f.orders) {
    std::vector<int> pos(f.universe_size, 0);
    for (int p = 0; p < f.universe_size; ++p) pos[ord[p]] = p;
    Orientation o;
    o.dirs.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      // colors on an edge are distinct, so the comparison never ties
      if (pos[c.colors[e.u]] < pos[c.colors[e.v]]) {
        o.dirs.push_back({e.u, e.v});
      } else {
        o.dirs.push_back({e.v, e.u});
      }
    }
    fam.members.push_back(std::move(o));
  }
  // the claim is whatever actually verifies, strongest first; a 3-suitable
  // family guarantees the in-elbow property for palettes of >= 3 colors,
  // but 2-color palettes with a vacuously suitable family can miss it
  if (verify_orientation_cover(fam, ElbowMode::in_elbow)) {
    fam.claimed_kind = CoverKindClaim::in_elbow_cover;
  } else if (verify_orientation_cover(fam, ElbowMode::elbow)) {
    fam.claimed_kind = CoverKindClaim::elbow_cover;
  } else {
    fam.claimed_kind = CoverKindClaim::none;
  }
  return fam;
}

namespace {

struct CoverageSet {
  std::array<uint64_t, 2> bits{0, 0};
  int count = 0;

  bool subset_of(const CoverageSet& other) const {
    return (bits[0] & ~other.bits[0]) == 0 && (bits[1] & ~other.bits[1]) == 0;
  }
};

std::optional<int> exact_cover_size(const Graph& g, ElbowMode mode, int k_max,
                                    int edge_budget) {
  if (k_max < 0 || k_max > 4) throw std::invalid_argument("k_max must be in [0, 4]");
  const int m = g.edge_count();
  if (m > edge_budget || m > 16) {
    throw BudgetExceeded("exact elbow solver budget is " +
                         std::to_string(std::min(edge_budget, 16)) + " edges, graph has " +
                         std::to_string(m));
  }
  const auto pairs = adjacent_edge_pairs(g);
  const int np = static_cast<int>(pairs.size());
  if (np == 0) return 0;
  if (k_max == 0) return std::nullopt;

  // coverage bitset over pairs for every one of the 2^m orientations;
  // bit i of the mask reverses edge i from its canonical low->high direction
  std::vector<CoverageSet> candidates;
  {
    std::set<std::array<uint64_t, 2>> seen;
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
      CoverageSet cs;
      for (int pi = 0; pi < np; ++pi) {
        auto [e, f] = pairs[pi];
        const Edge& ee = g.edge(e);
        const Edge& ff = g.edge(f);
        int x = shared_endpoint(ee, ff);
        int head_e = ((mask >> e) & 1) ? ee.u : ee.v;
        int head_f = ((mask >> f) & 1) ? ff.u : ff.v;
        bool in_elbow = head_e == x && head_f == x;
        bool out_elbow = head_e != x && head_f != x;
        bool hit = mode == ElbowMode::in_elbow ? in_elbow : (in_elbow || out_elbow);
        if (hit) {
          cs.bits[pi >> 6] |= 1ull << (pi & 63);
          ++cs.count;
        }
      }
      if (seen.insert(cs.bits).second) candidates.push_back(cs);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const CoverageSet& a, const CoverageSet& b) { return a.count > b.count; });
  // drop dominated coverage sets; descending count order means a potential
  // dominator always comes earlier
  std::vector<CoverageSet> kept;
  for (const CoverageSet& cs : candidates) {
    bool dominated = false;
    for (const CoverageSet& k : kept) {
      if (cs.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(cs);
  }
  if (kept.empty() || kept[0].count == 0) return std::nullopt;

  std::array<uint64_t, 2> full{0, 0};
  for (int pi = 0; pi < np; ++pi) full[pi >> 6] |= 1ull << (pi & 63);
  std::vector<std::vector<int>> coverers(np);
  for (int ci = 0; ci < static_cast<int>(kept.size()); ++ci) {
    for (int pi = 0; pi < np; ++pi)
      if ((kept[ci].bits[pi >> 6] >> (pi & 63)) & 1) coverers[pi].push_back(ci);
  }
  for (int pi = 0; pi < np; ++pi)
    if (coverers[pi].empty()) return std::nullopt;  // pair no orientation covers (impossible)
  const int max_gain = kept[0].count;

  int best = k_max + 1;
  // branch on the first uncovered pair; depth-first with a capacity bound
  auto dfs = [&](auto&& self, int depth, std::array<uint64_t, 2> cov, int covered) -> void {
    if (covered == np) {
      best = std::min(best, depth);
      return;
    }
    if (depth >= best - 1 || depth >= k_max) return;
    if (covered + static_cast<long long>(max_gain) * (std::min(best - 1, k_max) - depth) < np)
      return;
    int target = -1;
    for (int pi = 0; pi < np; ++pi) {
      if (!((cov[pi >> 6] >> (pi & 63)) & 1)) {
        target = pi;
        break;
      }
    }
    for (int ci : coverers[target]) {
      std::array<uint64_t, 2> next{cov[0] | kept[ci].bits[0], cov[1] | kept[ci].bits[1]};
      int cnt = __builtin_popcountll(next[0]) + __builtin_popcountll(next[1]);
      self(self, depth + 1, next, cnt);
    }
  };
  dfs(dfs, 0, {0, 0}, 0);
  if (best <= k_max) return best;
  return std::nullopt;
}

}  // namespace

std::optional<int> exact_elb(const Graph& g, int k_max, int edge_budget) {
  return exact_cover_size(g, ElbowMode::elbow, k_max, edge_budget);
}

std::optional<int> exact_inelb(const Graph& g, int k_max, int edge_budget) {
  return exact_cover_size(g, ElbowMode::in_elbow, k_max, edge_budget);
}

}  // namespace linecover
