#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linecover/graph.hpp"
#include "linecover/orientations.hpp"
#include "linecover/recognition.hpp"

namespace linecover {

// Verified in-elbow cover of lg.base -> equivalence cover of lg.line of the
// same size. Member i collects, per base vertex j, the clique of line
// vertices whose base edges point at j in orientation i.
Cover inelbow_to_equivalence_cover(const LineGraphMap& lg, const OrientationFamily& fam);

// Verified equivalence cover of lg.line -> in-elbow cover of lg.base using
// exactly 3 orientations per member (star-cliques point at their center in
// all three; triangle-cliques get one in-elbow vertex per orientation).
OrientationFamily equivalence_cover_to_inelbow(const LineGraphMap& lg, const Cover& c);

// Same input -> elbow cover with exactly 2 orientations per member.
OrientationFamily equivalence_cover_to_elbow(const LineGraphMap& lg, const Cover& c);

// Verified chordal cover of lg.line, triangle-free base -> elbow cover of
// lg.base, one orientation per member: walk a perfect elimination ordering of
// the member backwards, orienting each base edge to elbow with its earliest
// already-processed neighbor. Asserts the strong property that every pair
// adjacent inside a member elbows in that member's orientation.
OrientationFamily chordal_cover_to_elbow(const LineGraphMap& lg, const Cover& c);

// Re-tag a cover's claimed class (members unchanged). The usual move is
// equivalence -> chordal, which can only weaken the claim.
Cover with_cover_class(Cover c, CoverClass klass);

struct PipelineResult {
  LineGraphMap lg;
  Coloring coloring;
  bool coloring_exact = false;
  OrderFamily family;          // 3-suitable family on the palette
  OrientationFamily orientations;  // verified in-elbow cover
  Cover cover;                 // verified equivalence cover of lg.line
};

// Colors g (exact within the vertex budget, greedy beyond), builds a
// 3-suitable family on the palette, orients, and folds the result into an
// equivalence cover of L(g). Degenerate palettes (<= 2 colors) may miss the
// in-elbow property with a vacuously suitable single order; the pipeline then
// escalates the order universe to 3 colors, which restores the guarantee.
PipelineResult build_equivalence_cover_pipeline(const Graph& g, int vertex_budget = 16);

struct ChainReport {
  int n = 0;
  int m = 0;
  int chi = 0;
  bool has_adjacent_pair = false;
  int lower_bound = 0;        // ceil(lg lg chi) + 1, 0 when no edges
  int eq_cover_size = 0;      // verified equivalence cover of the line graph
  int inelbow_family_size = 0;
  int elbow_family_size = 0;
  std::optional<int> elb_exact;    // present when edge budget allows
  std::optional<int> inelb_exact;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Runs the whole pipeline on a triangle-free graph: exact coloring, suitable
// and mixing families, orientation covers, equivalence cover of the line
// graph, and (within budgets) the exact solvers; records any violation of
// the covering chain or of the elbow inequalities.
ChainReport covering_chain(const Graph& g, int vertex_budget = 16,
                           int edge_budget = 12, int k_max = 4);

}  // namespace linecover
