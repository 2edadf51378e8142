#ifndef CLUSTERWALK_ORACLE_HPP
#define CLUSTERWALK_ORACLE_HPP

#include <optional>
#include <vector>

#include "clusterwalk/cdg.hpp"
#include "clusterwalk/model.hpp"

namespace clusterwalk {

/// Every distinct single move available from `c`: all simple directed paths
/// and cycles over the clusters, with every choice of carried items.
/// Cyclical moves are canonicalized by rotating their smallest cluster to
/// the front, so each move appears exactly once. With bounds given, moves
/// whose result would violate them are dropped.
///
/// Exhaustive by design; guarded to n <= 8 and k <= 5 unless `force`.
std::vector<Move> enumerate_moves(const Clustering& c,
                                  const std::optional<SizeBounds>& bounds,
                                  bool force = false);

struct ExactDistance {
  int distance = 0;
  TransformationPlan plan;
};

/// Breadth-first search over the full assignment space: the exact minimum
/// number of moves from `from` to `to`, plus one optimal plan. With bounds,
/// only clusterings inside them are visited (the bounded circuit distance);
/// UnreachableError when no feasible walk exists.
ExactDistance exact_distance(const Clustering& from, const Clustering& to,
                             const std::optional<SizeBounds>& bounds,
                             bool force = false);

/// True when the CDG's arcs form one simple directed cycle or one simple
/// directed path — exactly the graphs whose transformation is a single move.
bool is_single_circuit(const ClusteringDifferenceGraph& g);

}  // namespace clusterwalk

#endif
