#ifndef CLUSTERWALK_CDG_HPP
#define CLUSTERWALK_CDG_HPP

#include <string>
#include <vector>

#include "clusterwalk/model.hpp"

namespace clusterwalk {

/// Directed arc-labeled multigraph of the transfers required to turn one
/// clustering into another. One vertex per cluster label; arc (i, j, x) means
/// item x sits in cluster i and must end in cluster j. Parallel arcs between
/// a cluster pair are fine; arc labels are pairwise distinct.
///
/// Arcs are kept sorted by (from, to, item), the canonical form used for
/// equality tests.
class ClusteringDifferenceGraph {
 public:
  ClusteringDifferenceGraph(int k, std::vector<Transfer> arcs);

  int k() const { return k_; }
  const std::vector<Transfer>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }

  friend bool operator==(const ClusteringDifferenceGraph& a,
                         const ClusteringDifferenceGraph& b) {
    return a.k_ == b.k_ && a.arcs_ == b.arcs_;
  }

 private:
  int k_;
  std::vector<Transfer> arcs_;
};

/// Per-vertex degree statistics of a CDG plus the aggregates the distance
/// bounds are built from.
struct DegreeProfile {
  std::vector<int> indegree;
  std::vector<int> outdegree;
  std::vector<int> shared;  // eta_i = min(in, out)
  std::vector<int> delta;   // |d+ - d-| = change in cluster size
  int half_delta_sum = 0;   // (1/2) sum delta_i; the sum is always even
  int i1 = 0;               // argmax eta, lowest index on ties
  int i2 = 0;               // argmax eta over i != i1, lowest index on ties
  int eta_i1 = 0;
  int eta_i2 = 0;
};

/// Throws MismatchedInstancesError unless both clusterings share items and k.
ClusteringDifferenceGraph build_cdg(const Clustering& from,
                                    const Clustering& to);

DegreeProfile degree_profile(const ClusteringDifferenceGraph& g);

/// CDG left over after playing `m` on `current`, still aimed at `target`.
/// Contractually equal to build_cdg(apply_move(current, m), target); computed
/// incrementally from `g`.
ClusteringDifferenceGraph residual(const ClusteringDifferenceGraph& g,
                                   const Move& m, const Clustering& current,
                                   const Clustering& target);

/// DOT rendering with one node per cluster (labeled 1-based) and one edge per
/// arc, labeled by item id. Node and edge order are stable.
std::string to_dot(const ClusteringDifferenceGraph& g);

}  // namespace clusterwalk

#endif
