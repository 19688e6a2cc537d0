#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linecover/graph.hpp"

namespace linecover {

struct PerfectEliminationOrder {
  std::vector<int> order;  // order[0] eliminated first; simplicial in the suffix
};

// Maximum cardinality search, ties broken by smallest vertex index. The
// candidate order is re-verified by the suffix-simplicial check before being
// returned, so a non-chordal input yields nullopt rather than a bogus order.
std::optional<PerfectEliminationOrder> find_peo(const Graph& g);

bool is_peo_valid(const Graph& g, const PerfectEliminationOrder& peo);

bool is_chordal(const Graph& g);

// Test oracle: exhaustively looks for a vertex subset inducing a cycle of
// length >= 4. Budget: vertex_count <= 8.
bool is_chordal_oracle(const Graph& g);

// Chordal + asteroidal-triple-free (Lekkerkerker-Boland).
bool is_interval(const Graph& g);

// Test oracle: backtracking search over sequences of 2n interval endpoint
// events. Budget: vertex_count <= 7.
bool is_interval_oracle(const Graph& g);

// Every connected component is a clique.
bool is_equivalence_graph(const Graph& g);

enum class CoverClass {
  equivalence,
  interval,
  chordal,
  elbow_orientation_derived,
  unrestricted,
};

std::string cover_class_name(CoverClass c);
CoverClass cover_class_from_name(const std::string& name);

// Cover of `target` by spanning subgraphs, each stored as a sorted list of
// canonical target-edge indices. Spanning: members share target's vertex set,
// so isolated vertices are implicit.
struct Cover {
  Graph target;
  CoverClass claimed_class = CoverClass::unrestricted;
  std::vector<std::vector<int>> members;
};

// Member i as a standalone graph on target's vertex set.
Graph member_graph(const Cover& c, int i);

struct CoverReport {
  bool union_ok = false;
  std::vector<int> missing_edges;    // target edge indices not in any member
  std::vector<int> failed_members;   // members failing the claimed class check
  std::vector<int> malformed_members;  // out-of-range or duplicate edge indices
  int size = 0;
  bool pass() const {
    return union_ok && failed_members.empty() && malformed_members.empty();
  }
};

// Union check + per-member class check. Class checks run for equivalence /
// interval / chordal claims; unrestricted and elbow-orientation-derived
// covers only get the union and well-formedness checks.
CoverReport cover_verify(const Cover& c);

}  // namespace linecover
