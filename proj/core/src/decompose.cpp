#include "clusterwalk/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "arc_util.hpp"
#include "clusterwalk/flow.hpp"

namespace clusterwalk {

namespace {

// Working multigraph: a mutable arc pool with sorted adjacency.
struct Pool {
  int k;
  std::vector<Transfer> arcs;  // kept sorted (from, to, item)
  std::vector<bool> used;

  Pool(int k, std::vector<Transfer> a) : k(k), arcs(std::move(a)) {
    std::sort(arcs.begin(), arcs.end());
    used.assign(arcs.size(), false);
  }

  int out_res(int v) const {
    int n = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (!used[i] && arcs[i].from == v) ++n;
    return n;
  }
  int in_res(int v) const {
    int n = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (!used[i] && arcs[i].to == v) ++n;
    return n;
  }
  bool any_left() const {
    for (bool u : used)
      if (!u) return true;
    return false;
  }
  // Smallest unused arc out of v, by (to, item); -1 if none.
  int first_out(int v) const {
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (!used[i] && arcs[i].from == v) return static_cast<int>(i);
    return -1;
  }
};

// BFS for a shortest path from `start` to the nearest vertex with residual
// deficit. Expansion follows the sorted arc order, which fixes ties.
std::vector<Transfer> peel_one_path(Pool& pool, int start) {
  std::vector<int> pred_arc(pool.k, -1);
  std::vector<bool> seen(pool.k, false);
  std::deque<int> queue{start};
  seen[start] = true;
  int found = -1;
  while (!queue.empty() && found < 0) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < pool.arcs.size() && found < 0; ++i) {
      if (pool.used[i] || pool.arcs[i].from != v) continue;
      int w = pool.arcs[i].to;
      if (seen[w]) continue;
      seen[w] = true;
      pred_arc[w] = static_cast<int>(i);
      if (pool.in_res(w) > pool.out_res(w)) {
        found = w;
        break;
      }
      queue.push_back(w);
    }
  }
  std::vector<Transfer> path;
  if (found < 0) return path;  // caller treats as logic error
  for (int v = found; v != start;) {
    int id = pred_arc[v];
    path.push_back(pool.arcs[id]);
    pool.used[id] = true;
    v = pool.arcs[id].from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<Transfer>> peel_all_paths(Pool& pool) {
  std::vector<std::vector<Transfer>> paths;
  for (;;) {
    int start = -1;
    for (int v = 0; v < pool.k && start < 0; ++v)
      if (pool.out_res(v) > pool.in_res(v)) start = v;
    if (start < 0) break;
    std::vector<Transfer> p = peel_one_path(pool, start);
    if (p.empty())
      throw Error("decompose: internal error, no deficit reachable");
    paths.push_back(std::move(p));
  }
  return paths;
}

// Walk-until-repeat with smallest successor. Sound on balanced arc pools,
// where a walk can never strand before revisiting a vertex.
std::vector<std::vector<Transfer>> peel_cycles_balanced(Pool& pool) {
  std::vector<std::vector<Transfer>> cycles;
  for (;;) {
    int start = -1;
    for (int v = 0; v < pool.k && start < 0; ++v)
      if (pool.first_out(v) >= 0) start = v;
    if (start < 0) break;
    std::vector<int> walk_arcs;
    std::vector<int> on_walk(pool.k, -1);
    int cur = start;
    on_walk[start] = 0;
    for (;;) {
      int id = pool.first_out(cur);
      if (id < 0) throw Error("decompose: arc pool is not balanced");
      pool.used[id] = true;
      walk_arcs.push_back(id);
      cur = pool.arcs[id].to;
      if (on_walk[cur] >= 0) break;
      on_walk[cur] = static_cast<int>(walk_arcs.size());
    }
    // Arcs before the loop entry point go back into the pool.
    int loop_from = on_walk[cur];
    std::vector<Transfer> cycle;
    for (std::size_t i = 0; i < walk_arcs.size(); ++i) {
      if (static_cast<int>(i) < loop_from)
        pool.used[walk_arcs[i]] = false;
      else
        cycle.push_back(pool.arcs[walk_arcs[i]]);
    }
    cycles.push_back(detail::canonical_cycle(std::move(cycle)));
  }
  std::sort(cycles.begin(), cycles.end(), detail::component_less);
  return cycles;
}

// Some simple cycle in an arbitrary pool via colored depth-first search, or
// false when acyclic. Deterministic through sorted adjacency.
bool find_cycle_dfs(Pool& pool, std::vector<Transfer>& out) {
  std::vector<std::vector<int>> adj(pool.k);
  for (std::size_t i = 0; i < pool.arcs.size(); ++i)
    if (!pool.used[i]) adj[pool.arcs[i].from].push_back(static_cast<int>(i));
  std::vector<int> color(pool.k, 0);  // 0 fresh, 1 on stack, 2 finished
  for (int start = 0; start < pool.k; ++start) {
    if (color[start] != 0 || adj[start].empty()) continue;
    std::vector<int> vert{start}, pos{0}, in_arc{-1};
    color[start] = 1;
    while (!vert.empty()) {
      int v = vert.back();
      if (pos.back() < static_cast<int>(adj[v].size())) {
        int id = adj[v][pos.back()++];
        int w = pool.arcs[id].to;
        if (color[w] == 1) {
          std::size_t j = 0;
          while (vert[j] != w) ++j;
          for (std::size_t x = j + 1; x < vert.size(); ++x)
            out.push_back(pool.arcs[in_arc[x]]);
          out.push_back(pool.arcs[id]);
          return true;
        }
        if (color[w] == 0) {
          color[w] = 1;
          vert.push_back(w);
          pos.push_back(0);
          in_arc.push_back(id);
        }
      } else {
        color[v] = 2;
        vert.pop_back();
        pos.pop_back();
        in_arc.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

PathCycleDecomposition path_cycle_decompose(const ClusteringDifferenceGraph& g,
                                            DecomposeStrategy strategy) {
  PathCycleDecomposition out;
  out.provenance = strategy;
  switch (strategy) {
    case DecomposeStrategy::GreedyPathsFirst: {
      Pool pool(g.k(), g.arcs());
      out.paths = peel_all_paths(pool);
      out.cycles = peel_cycles_balanced(pool);
      break;
    }
    case DecomposeStrategy::GreedyCyclesFirst: {
      Pool pool(g.k(), g.arcs());
      std::vector<Transfer> cycle;
      while (find_cycle_dfs(pool, cycle)) {
        for (const Transfer& a : cycle) {
          auto it = std::find(pool.arcs.begin(), pool.arcs.end(), a);
          pool.used[it - pool.arcs.begin()] = true;
        }
        out.cycles.push_back(detail::canonical_cycle(std::move(cycle)));
        cycle.clear();
      }
      std::sort(out.cycles.begin(), out.cycles.end(), detail::component_less);
      out.paths = peel_all_paths(pool);
      break;
    }
    case DecomposeStrategy::MaxCycleEdges: {
      // Keep the largest balanced arc subset: capacity-1 arcs at cost -1,
      // conservation everywhere, solved as a min-cost circulation.
      FlowNetwork net;
      net.node_count = g.k();
      for (const Transfer& a : g.arcs())
        net.arcs.push_back(FlowArc{a.from, a.to, 0, 1, -1});
      auto flow = min_cost_circulation(net);
      if (!flow) throw Error("decompose: circulation infeasible");
      std::vector<Transfer> kept, rest;
      for (std::size_t i = 0; i < g.arcs().size(); ++i)
        ((*flow)[i] > 0 ? kept : rest).push_back(g.arcs()[i]);
      Pool cycle_pool(g.k(), std::move(kept));
      out.cycles = peel_cycles_balanced(cycle_pool);
      Pool path_pool(g.k(), std::move(rest));
      out.paths = peel_all_paths(path_pool);
      if (path_pool.any_left())
        throw Error("decompose: max-cycle complement was not acyclic");
      break;
    }
  }
  std::sort(out.paths.begin(), out.paths.end(), detail::component_less);
  return out;
}

CycleCover disjoint_cycle_cover(int k, const std::vector<Transfer>& dy_arcs,
                                const std::vector<int>& required) {
  // Node split: vertex v becomes in-copy v and out-copy k+v joined by a
  // capacity-1 arc; required vertices carry lower bound 1 on that arc.
  std::vector<bool> req(k, false);
  for (int v : required) req[v] = true;
  FlowNetwork net;
  net.node_count = 2 * k;
  for (int v = 0; v < k; ++v)
    net.arcs.push_back(FlowArc{v, k + v, req[v] ? 1 : 0, 1, 0});
  std::vector<Transfer> sorted = dy_arcs;
  std::sort(sorted.begin(), sorted.end());
  for (const Transfer& a : sorted)
    net.arcs.push_back(FlowArc{k + a.from, a.to, 0, 1, 0});
  auto flow = feasible_circulation(net);
  if (!flow)
    throw CoverInfeasibleError(
        "no vertex-disjoint cycle cover of the required vertices exists");
  std::vector<Transfer> support;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if ((*flow)[k + i] > 0) support.push_back(sorted[i]);
  Pool pool(k, std::move(support));
  CycleCover cover;
  cover.cycles = peel_cycles_balanced(pool);
  std::set<int> covered;
  for (const auto& cyc : cover.cycles)
    for (int v : detail::chain_vertices(cyc, true)) covered.insert(v);
  cover.covered.assign(covered.begin(), covered.end());
  return cover;
}

}  // namespace clusterwalk
