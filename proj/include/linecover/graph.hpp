#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace linecover {

// Unordered edge stored canonically with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Immutable simple graph. Edges are kept sorted lexicographically; the
// position of an edge in edges() is its canonical index, which every other
// module (line graphs, orientations, covers) uses as the edge identity.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes endpoint order and sorts the edge list. Rejects self-loops
  // and out-of-range endpoints always; duplicates are rejected unless dedupe.
  static Graph build(int vertex_count, std::vector<Edge> edges, bool dedupe = false);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  bool adjacent(int u, int v) const {
    return (adj_bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
  }
  // Canonical index of edge {u,v}, or -1 when absent.
  int edge_index(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  size_t words_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
  std::vector<std::vector<int>> incident_;  // canonical edge indices per vertex
  std::vector<uint64_t> adj_bits_;          // n rows of ceil(n/64) words
};

// Deterministic generators. All argument validation throws std::invalid_argument.
Graph generate_complete(int n);
Graph generate_cycle(int n);          // n >= 3
Graph generate_path(int n);           // n >= 1
Graph generate_star(int n);           // n vertices: center 0 plus n-1 leaves
Graph generate_mycielski_iterate(int k);  // k >= 2; M_2 = K_2, M_3 = C_5, chi(M_k) = k
Graph generate_random(int n, double p, uint64_t seed);

struct LineGraphMap {
  Graph base;
  Graph line;  // vertex i of line == canonical edge i of base
};

LineGraphMap line_graph(const Graph& g);

bool is_triangle_free(const Graph& g);

struct Coloring {
  std::vector<int> colors;  // per vertex, values in [0, num_colors)
  int num_colors = 0;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

// DSATUR: repeatedly color the vertex with the most distinctly-colored
// neighbors (ties by vertex index) with the least free color.
Coloring greedy_coloring(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  Coloring witness;  // lexicographically least proper chi-coloring
};

// Exact chromatic number by branch and bound (clique lower bound, DSATUR
// upper bound, saturation-ordered decision search per k). Throws
// BudgetExceeded when vertex_count > vertex_budget.
ChromaticResult chromatic_number_exact(const Graph& g, int vertex_budget = 16);

// DOT export for eyeballing.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace linecover
