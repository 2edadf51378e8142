#ifndef CLUSTERWALK_DECOMPOSE_HPP
#define CLUSTERWALK_DECOMPOSE_HPP

#include <vector>

#include "clusterwalk/cdg.hpp"

namespace clusterwalk {

enum class DecomposeStrategy {
  GreedyPathsFirst,   // peel excess-to-deficit paths, then cycles
  GreedyCyclesFirst,  // peel cycles until acyclic, then paths
  MaxCycleEdges,      // min-cost circulation; D_Y gets the most arcs possible
};

/// Split of a CDG's arcs into (1/2) sum delta_i simple directed paths running
/// from excess to deficit vertices, plus a cycle list whose arcs are
/// Eulerian-balanced. Paths may share vertices with each other and with the
/// cycles; together the parts hold every input arc exactly once.
struct PathCycleDecomposition {
  std::vector<std::vector<Transfer>> paths;
  std::vector<std::vector<Transfer>> cycles;
  DecomposeStrategy provenance = DecomposeStrategy::GreedyPathsFirst;
};

PathCycleDecomposition path_cycle_decompose(const ClusteringDifferenceGraph& g,
                                            DecomposeStrategy strategy);

/// Vertex-disjoint simple cycles drawn from a balanced arc multiset,
/// covering every required vertex. Realized as a node-split circulation:
/// each vertex's in/out copies joined by a capacity-1 arc (lower bound 1 on
/// required vertices), each graph arc capacity 1.
struct CycleCover {
  std::vector<std::vector<Transfer>> cycles;
  std::vector<int> covered;  // sorted vertex set
};

/// Throws CoverInfeasibleError when the flow model admits no cover.
CycleCover disjoint_cycle_cover(int k, const std::vector<Transfer>& dy_arcs,
                                const std::vector<int>& required);

}  // namespace clusterwalk

#endif
