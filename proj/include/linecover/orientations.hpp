#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linecover/graph.hpp"
#include "linecover/orders.hpp"

namespace linecover {

struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

// One direction per canonical edge; dirs[i] is edge i with an arrow on it.
struct Orientation {
  std::vector<Arc> dirs;
};

bool orientation_well_formed(const Graph& g, const Orientation& o);

enum class ElbowKind { in_elbow, out_elbow, none };

// Edges e and f must be distinct and share exactly one endpoint x.
// in-elbow: both heads at x; out-elbow: both tails at x.
ElbowKind elbow_kind(const Graph& g, const Orientation& o, int e, int f);

enum class CoverKindClaim { elbow_cover, in_elbow_cover, none };

std::string cover_kind_name(CoverKindClaim k);
CoverKindClaim cover_kind_from_name(const std::string& name);

struct OrientationFamily {
  Graph graph;
  std::vector<Orientation> members;
  CoverKindClaim claimed_kind = CoverKindClaim::none;
};

enum class ElbowMode { elbow, in_elbow };

// All adjacent edge pairs of the graph, each sharing exactly one endpoint;
// generated per shared vertex, so each pair appears once.
std::vector<std::pair<int, int>> adjacent_edge_pairs(const Graph& g);

struct OrientationCoverReport {
  bool pass = false;
  std::vector<std::pair<int, int>> uncovered;  // edge index pairs
};

// elbow mode accepts in- or out-elbows; in_elbow mode accepts in-elbows only.
// A graph with no adjacent edge pairs is covered by any family, empty included.
OrientationCoverReport verify_orientation_cover_report(const OrientationFamily& fam,
                                                       ElbowMode mode);
bool verify_orientation_cover(const OrientationFamily& fam, ElbowMode mode);

// One orientation per order: edge xy points x -> y iff c(x) comes before c(y)
// in that order. Requires a proper coloring and universe_size >= num_colors.
// If f is 3-suitable the family is verified and claimed as an in-elbow cover;
// else if 3-mixing, verified and claimed as an elbow cover; else no claim.
OrientationFamily orient_from_coloring(const Graph& g, const Coloring& c,
                                       const OrderFamily& f);

// Exhaustive minimum cover size as a set-cover branch and bound over the
// deduplicated coverage sets of all 2^m orientations (global edge-reversal
// symmetry collapses in the dedup step for elbow mode). Returns the smallest
// k <= k_max, nullopt when every k <= k_max fails, and 0 for graphs without
// adjacent edge pairs. Budgets: edge_count <= edge_budget, k_max <= 4.
std::optional<int> exact_elb(const Graph& g, int k_max = 4, int edge_budget = 12);
std::optional<int> exact_inelb(const Graph& g, int k_max = 4, int edge_budget = 12);

}  // namespace linecover
