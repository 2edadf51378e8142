#ifndef CLUSTERWALK_FLOW_HPP
#define CLUSTERWALK_FLOW_HPP

#include <optional>
#include <vector>

#include "clusterwalk/errors.hpp"

namespace clusterwalk {

/// One directed arc of a flow network. All data integral; parallel arcs and
/// negative costs allowed.
struct FlowArc {
  int tail = 0;
  int head = 0;
  int lower = 0;
  int capacity = 0;
  long long cost = 0;
};

struct FlowNetwork {
  int node_count = 0;
  std::vector<FlowArc> arcs;
};

struct MaxFlowResult {
  long long value = 0;
  std::vector<int> flow;  // parallel to network.arcs
};

/// Integral maximum s-t flow (augmenting paths; networks here have at most a
/// few dozen nodes). Arc lower bounds must be zero.
MaxFlowResult max_flow(const FlowNetwork& net, int s, int t);

/// Integral circulation with lower <= flow <= capacity and conservation at
/// every node, via the excess-node transformation, or nullopt when none
/// exists.
std::optional<std::vector<int>> feasible_circulation(const FlowNetwork& net);

/// Feasible circulation of minimum total cost (negative-cycle canceling on
/// the residual network), or nullopt when no feasible circulation exists.
std::optional<std::vector<int>> min_cost_circulation(const FlowNetwork& net);

}  // namespace clusterwalk

#endif
