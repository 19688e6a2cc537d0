#include "linecover/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "linecover/errors.hpp"

namespace linecover {

Graph Graph::build(int vertex_count, std::vector<Edge> edges, bool dedupe) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (dedupe) {
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  } else {
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + ")");
    }
  }

  Graph g;
  g.n_ = vertex_count;
  g.words_ = static_cast<size_t>(std::max(vertex_count + 63, 64) / 64);
  g.edges_ = std::move(edges);
  g.adj_.assign(vertex_count, {});
  g.incident_.assign(vertex_count, {});
  g.adj_bits_.assign(static_cast<size_t>(vertex_count) * g.words_, 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges_[i];
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
    g.incident_[e.u].push_back(i);
    g.incident_[e.v].push_back(i);
    g.adj_bits_[static_cast<size_t>(e.u) * g.words_ + (e.v >> 6)] |= 1ull << (e.v & 63);
    g.adj_bits_[static_cast<size_t>(e.v) * g.words_ + (e.u >> 6)] |= 1ull << (e.u & 63);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it == edges_.end() || !(*it == probe)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph generate_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::build(n, std::move(edges));
}

Graph generate_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::build(n, std::move(edges));
}

Graph generate_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, std::move(edges));
}

Graph generate_star(int n) {
  if (n < 1) throw std::invalid_argument("star: n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph::build(n, std::move(edges));
}

namespace {

Graph mycielskian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  // shadow of u is n+u, apex is 2n
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, n + e.v});
    edges.push_back({e.v, n + e.u});
  }
  for (int u = 0; u < n; ++u) edges.push_back({n + u, 2 * n});
  return Graph::build(2 * n + 1, std::move(edges));
}

}  // namespace

Graph generate_mycielski_iterate(int k) {
  if (k < 2) throw std::invalid_argument("mycielski iterate: k >= 2");
  Graph g = Graph::build(2, {{0, 1}});
  for (int i = 3; i <= k; ++i) g = mycielskian(g);
  return g;
}

Graph generate_random(int n, double p, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random: n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random: p in [0,1]");
  std::mt19937_64 rng(seed);
  // raw 53-bit threshold draw; std distributions are not portable across
  // library implementations and the edge sets must be reproducible
  const uint64_t threshold = static_cast<uint64_t>(p * 9007199254740992.0);  // p * 2^53
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((rng() >> 11) < threshold) edges.push_back({u, v});
    }
  }
  return Graph::build(n, std::move(edges));
}

LineGraphMap line_graph(const Graph& g) {
  const int m = g.edge_count();
  std::vector<Edge> line_edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (size_t a = 0; a < inc.size(); ++a)
      for (size_t b = a + 1; b < inc.size(); ++b)
        line_edges.push_back({inc[a], inc[b]});
  }
  // each adjacent edge pair shares exactly one vertex in a simple graph,
  // so no pair is produced twice
  return LineGraphMap{g, Graph::build(m, std::move(line_edges))};
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (int w : g.neighbors(e.u)) {
      if (w != e.v && g.adjacent(w, e.v)) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
  std::vector<char> seen(std::max(c.num_colors, 0), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int col = c.colors[v];
    if (col < 0 || col >= c.num_colors) return false;
    seen[col] = 1;
  }
  for (char s : seen)
    if (!s) return false;  // k must be tight
  for (const Edge& e : g.edges())
    if (c.colors[e.u] == c.colors[e.v]) return false;
  return true;
}

Coloring greedy_coloring(const Graph& g) {
  const int n = g.vertex_count();
  Coloring out;
  out.colors.assign(n, -1);
  if (n == 0) return out;
  std::vector<std::vector<char>> neighbor_has(n);
  for (int v = 0; v < n; ++v) neighbor_has[v].assign(n + 1, 0);
  std::vector<int> sat(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (out.colors[v] >= 0) continue;
      if (pick < 0 || sat[v] > sat[pick]) pick = v;
    }
    int c = 0;
    while (neighbor_has[pick][c]) ++c;
    out.colors[pick] = c;
    out.num_colors = std::max(out.num_colors, c + 1);
    for (int w : g.neighbors(pick)) {
      if (out.colors[w] >= 0) continue;
      if (!neighbor_has[w][c]) {
        neighbor_has[w][c] = 1;
        ++sat[w];
      }
    }
  }
  return out;
}

namespace {

// shared machinery for the decision search and the witness search
struct ColorState {
  const Graph& g;
  int k;
  std::vector<int> color;
  std::vector<std::vector<int>> ncount;  // ncount[v][c]: neighbors of v colored c
  std::vector<int> sat;                  // distinct colors around v
  int uncolored;

  explicit ColorState(const Graph& graph, int colors)
      : g(graph),
        k(colors),
        color(graph.vertex_count(), -1),
        ncount(graph.vertex_count(), std::vector<int>(colors, 0)),
        sat(graph.vertex_count(), 0),
        uncolored(graph.vertex_count()) {}

  void assign(int v, int c) {
    color[v] = c;
    --uncolored;
    for (int w : g.neighbors(v)) {
      if (color[w] >= 0) continue;
      if (ncount[w][c]++ == 0) ++sat[w];
    }
  }

  void unassign(int v, int c) {
    color[v] = -1;
    ++uncolored;
    for (int w : g.neighbors(v)) {
      if (color[w] >= 0) continue;
      if (--ncount[w][c] == 0) --sat[w];
    }
  }

  bool neighborhood_saturated(int v) const {
    for (int w : g.neighbors(v))
      if (color[w] < 0 && sat[w] >= k) return true;
    return false;
  }

  // is there any proper k-coloring? vertices picked by saturation, ties by index
  bool decide(int used) {
    if (uncolored == 0) return true;
    int v = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (color[u] >= 0) continue;
      if (v < 0 || sat[u] > sat[v]) v = u;
    }
    if (sat[v] >= k) return false;
    const int cap = std::min(used, k - 1);  // colors beyond the first unused are symmetric
    for (int c = 0; c <= cap; ++c) {
      if (ncount[v][c] != 0) continue;
      assign(v, c);
      bool dead = neighborhood_saturated(v);
      if (!dead && decide(std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  // lexicographically least proper k-coloring, vertices in index order
  bool lex_witness(int v, int used) {
    if (v == g.vertex_count()) return true;
    const int cap = std::min(used, k - 1);
    for (int c = 0; c <= cap; ++c) {
      if (ncount[v][c] != 0) continue;
      assign(v, c);
      bool dead = neighborhood_saturated(v);
      if (!dead && lex_witness(v + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }
};

int greedy_clique_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g, int vertex_budget) {
  const int n = g.vertex_count();
  if (n > vertex_budget || n > 64) {
    throw BudgetExceeded("graph too large for exact chromatic solver (" +
                         std::to_string(n) + " vertices, budget " +
                         std::to_string(std::min(vertex_budget, 64)) +
                         "); fall back to greedy_coloring");
  }
  ChromaticResult out;
  if (n == 0) {
    out.chi = 0;
    return out;
  }
  if (g.edge_count() == 0) {
    out.chi = 1;
    out.witness.colors.assign(n, 0);
    out.witness.num_colors = 1;
    return out;
  }
  const int ub = greedy_coloring(g).num_colors;
  int lb = std::max(2, greedy_clique_bound(g));
  int chi = ub;
  for (int k = lb; k < ub; ++k) {
    ColorState st(g, k);
    st.assign(0, 0);  // vertex 0 can take color 0 up to symmetry
    if (st.decide(1)) {
      chi = k;
      break;
    }
  }
  ColorState st(g, chi);
  if (!st.lex_witness(0, 0)) {
    throw std::logic_error("no witness at the computed chromatic number");
  }
  out.chi = chi;
  out.witness.colors = st.color;
  out.witness.num_colors = chi;
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace linecover
