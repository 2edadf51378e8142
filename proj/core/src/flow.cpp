#include "clusterwalk/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace clusterwalk {

namespace {

// Residual-graph solver shared by all three entry points. Arcs are stored in
// forward/backward pairs; arc 2i is the forward copy of input arc i.
struct Residual {
  struct Edge {
    int to;
    int cap;
    long long cost;
  };
  int n;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;

  explicit Residual(int n) : n(n), adj(n) {}

  void add(int u, int v, int cap, long long cost) {
    adj[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap, cost});
    adj[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0, -cost});
  }

  // Edmonds-Karp: BFS for a shortest augmenting path, repeat.
  long long augment_all(int s, int t) {
    long long total = 0;
    for (;;) {
      std::vector<int> pred_edge(n, -1);
      std::vector<bool> seen(n, false);
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop();
        for (int id : adj[u]) {
          const Edge& e = edges[id];
          if (e.cap > 0 && !seen[e.to]) {
            seen[e.to] = true;
            pred_edge[e.to] = id;
            q.push(e.to);
          }
        }
      }
      if (!seen[t]) return total;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = t; v != s;) {
        int id = pred_edge[v];
        bottleneck = std::min(bottleneck, edges[id].cap);
        v = edges[id ^ 1].to;
      }
      for (int v = t; v != s;) {
        int id = pred_edge[v];
        edges[id].cap -= bottleneck;
        edges[id ^ 1].cap += bottleneck;
        v = edges[id ^ 1].to;
      }
      total += bottleneck;
    }
  }

  // Bellman-Ford negative-cycle detection on residual arcs; cancels one cycle
  // per call. Returns false when no negative cycle remains.
  bool cancel_one_negative_cycle() {
    std::vector<long long> dist(n, 0);
    std::vector<int> pred(n, -1);
    int hit = -1;
    for (int pass = 0; pass < n; ++pass) {
      hit = -1;
      for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        const Edge& e = edges[id];
        if (e.cap <= 0) continue;
        int u = edges[id ^ 1].to;
        if (dist[u] + e.cost < dist[e.to]) {
          dist[e.to] = dist[u] + e.cost;
          pred[e.to] = id;
          hit = e.to;
        }
      }
      if (hit < 0) return false;
    }
    // Walk predecessors n times to land inside the cycle, then collect it.
    int v = hit;
    for (int i = 0; i < n; ++i) v = edges[pred[v] ^ 1].to;
    std::vector<int> cycle;
    for (int u = v;;) {
      cycle.push_back(pred[u]);
      u = edges[pred[u] ^ 1].to;
      if (u == v) break;
    }
    int bottleneck = std::numeric_limits<int>::max();
    for (int id : cycle) bottleneck = std::min(bottleneck, edges[id].cap);
    for (int id : cycle) {
      edges[id].cap -= bottleneck;
      edges[id ^ 1].cap += bottleneck;
    }
    return true;
  }
};

void check_network(const FlowNetwork& net) {
  for (const FlowArc& a : net.arcs) {
    if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 ||
        a.head >= net.node_count)
      throw ValidationError("flow: arc endpoint out of range");
    if (a.lower < 0 || a.lower > a.capacity)
      throw ValidationError("flow: need 0 <= lower <= capacity");
  }
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net, int s, int t) {
  check_network(net);
  if (s == t) throw ValidationError("flow: source equals sink");
  for (const FlowArc& a : net.arcs)
    if (a.lower != 0)
      throw ValidationError("flow: max_flow requires zero lower bounds");
  Residual r(net.node_count);
  for (const FlowArc& a : net.arcs) r.add(a.tail, a.head, a.capacity, 0);
  MaxFlowResult result;
  result.value = r.augment_all(s, t);
  result.flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    result.flow[i] = net.arcs[i].capacity - r.edges[2 * i].cap;
  return result;
}

std::optional<std::vector<int>> feasible_circulation(const FlowNetwork& net) {
  check_network(net);
  // Send every lower bound, then repair conservation through a super
  // source/sink pair.
  int s = net.node_count;
  int t = net.node_count + 1;
  std::vector<long long> excess(net.node_count, 0);
  Residual r(net.node_count + 2);
  for (const FlowArc& a : net.arcs) {
    r.add(a.tail, a.head, a.capacity - a.lower, 0);
    excess[a.head] += a.lower;
    excess[a.tail] -= a.lower;
  }
  long long need = 0;
  for (int v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      r.add(s, v, static_cast<int>(excess[v]), 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      r.add(v, t, static_cast<int>(-excess[v]), 0);
    }
  }
  if (r.augment_all(s, t) != need) return std::nullopt;
  std::vector<int> flow(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    flow[i] =
        net.arcs[i].lower + (net.arcs[i].capacity - net.arcs[i].lower) -
        r.edges[2 * i].cap;
  return flow;
}

std::optional<std::vector<int>> min_cost_circulation(const FlowNetwork& net) {
  check_network(net);
  int s = net.node_count;
  int t = net.node_count + 1;
  std::vector<long long> excess(net.node_count, 0);
  Residual r(net.node_count + 2);
  for (const FlowArc& a : net.arcs) {
    r.add(a.tail, a.head, a.capacity - a.lower, a.cost);
    excess[a.head] += a.lower;
    excess[a.tail] -= a.lower;
  }
  long long need = 0;
  for (int v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      r.add(s, v, static_cast<int>(excess[v]), 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      r.add(v, t, static_cast<int>(-excess[v]), 0);
    }
  }
  if (r.augment_all(s, t) != need) return std::nullopt;
  while (r.cancel_one_negative_cycle()) {
  }
  std::vector<int> flow(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    flow[i] =
        net.arcs[i].lower + (net.arcs[i].capacity - net.arcs[i].lower) -
        r.edges[2 * i].cap;
  return flow;
}

}  // namespace clusterwalk
