#ifndef CLUSTERWALK_TEST_SUPPORT_HPP
#define CLUSTERWALK_TEST_SUPPORT_HPP

// Shared test machinery: instance builders driven by explicit arc lists,
// family generators for the randomized suites, and brute-force oracles that
// stay independent of the library code paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clusterwalk/cdg.hpp"
#include "clusterwalk/flow.hpp"
#include "clusterwalk/generate.hpp"
#include "clusterwalk/model.hpp"

namespace cwtest {

using clusterwalk::Clustering;
using clusterwalk::FlowNetwork;
using clusterwalk::Rng;
using clusterwalk::Transfer;

struct Instance {
  Clustering source;
  Clustering target;
};

// Builds the unique minimal instance whose CDG is exactly `arcs`; each arc
// gets its own fresh item. `extra` adds stay-put items per cluster.
inline Instance instance_from_arcs(int k, const std::vector<std::pair<int, int>>& arcs,
                                   const std::vector<int>& extra = {}) {
  std::vector<std::string> items;
  std::vector<int> a, b;
  int next = 1;
  for (const auto& [from, to] : arcs) {
    items.push_back("x" + std::to_string(next++));
    a.push_back(from);
    b.push_back(to);
  }
  for (std::size_t c = 0; c < extra.size(); ++c)
    for (int i = 0; i < extra[c]; ++i) {
      items.push_back("x" + std::to_string(next++));
      a.push_back(static_cast<int>(c));
      b.push_back(static_cast<int>(c));
    }
  return {Clustering(items, k, a), Clustering(items, k, b)};
}

inline std::vector<std::pair<int, int>> cycle_arcs(const std::vector<int>& vs) {
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    arcs.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
  return arcs;
}

inline std::vector<std::pair<int, int>> path_arcs(const std::vector<int>& vs) {
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    arcs.emplace_back(vs[i], vs[i + 1]);
  return arcs;
}

// ------------------------------------------------------------------
// Families for the randomized suites.

struct FamilyInstance {
  Instance instance;
  std::vector<std::vector<Transfer>> paths;   // as labeled arcs of the CDG
  std::vector<std::vector<Transfer>> cycles;
};

inline std::vector<Transfer> label_arcs(const Instance& inst,
                                        const std::vector<std::pair<int, int>>& arcs,
                                        int first_item) {
  std::vector<Transfer> out;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    out.push_back(Transfer{"x" + std::to_string(first_item + static_cast<int>(i)),
                           arcs[i].first, arcs[i].second});
  (void)inst;
  return out;
}

// Carves `count` disjoint cluster blocks of >= 2 vertices out of the budget;
// shrinks the count rather than overflowing.
inline std::vector<std::vector<int>> carve_blocks(Rng& rng, int& v, int budget,
                                                  int count, int max_len = 4) {
  std::vector<std::vector<int>> blocks;
  count = std::min(count, std::max(0, (budget - v) / 2));
  for (int i = 0; i < count; ++i) {
    int remaining_blocks = count - i - 1;
    int room = budget - v - 2 * remaining_blocks;
    if (room < 2) break;
    int len = 2 + rng.next(std::min(max_len - 1, room - 1));
    std::vector<int> vs(len);
    std::iota(vs.begin(), vs.end(), v);
    v += len;
    blocks.push_back(std::move(vs));
  }
  return blocks;
}

// s >= 2 vertex-disjoint cycles.
inline FamilyInstance gen_disjoint_cycles(Rng& rng, int max_k) {
  int s = 2 + rng.next(3);
  int v = 0;
  std::vector<std::vector<int>> blocks = carve_blocks(rng, v, max_k, s);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& vs : blocks) {
    auto c = cycle_arcs(vs);
    arcs.insert(arcs.end(), c.begin(), c.end());
  }
  FamilyInstance f{instance_from_arcs(v, arcs), {}, {}};
  int item = 1;
  for (const auto& vs : blocks) {
    f.cycles.push_back(label_arcs(f.instance, cycle_arcs(vs), item));
    item += static_cast<int>(vs.size());
  }
  return f;
}

// t disjoint paths plus s >= 1 disjoint cycles, all pairwise disjoint.
inline FamilyInstance gen_disjoint_paths_and_cycles(Rng& rng, int max_k,
                                                    int t_choice = -1) {
  int t = t_choice >= 0 ? t_choice : 1 + rng.next(3);
  int s = 1 + rng.next(2);
  int v = 0;
  std::vector<std::vector<int>> pblocks =
      carve_blocks(rng, v, max_k - 2 * s, t);
  std::vector<std::vector<int>> cblocks = carve_blocks(rng, v, max_k, s);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& vs : pblocks) {
    auto p = path_arcs(vs);
    arcs.insert(arcs.end(), p.begin(), p.end());
  }
  for (const auto& vs : cblocks) {
    auto c = cycle_arcs(vs);
    arcs.insert(arcs.end(), c.begin(), c.end());
  }
  FamilyInstance f{instance_from_arcs(v, arcs), {}, {}};
  int item = 1;
  for (const auto& vs : pblocks) {
    f.paths.push_back(label_arcs(f.instance, path_arcs(vs), item));
    item += static_cast<int>(vs.size()) - 1;
  }
  for (const auto& vs : cblocks) {
    f.cycles.push_back(label_arcs(f.instance, cycle_arcs(vs), item));
    item += static_cast<int>(vs.size());
  }
  return f;
}

// One path meeting a set of disjoint cycles in at most three vertices.
// `fresh_reserve` is the vertex budget kept back for the path's own stops.
inline FamilyInstance gen_path_with_cover(Rng& rng, int max_k,
                                          int fresh_reserve = 5) {
  int s = 1 + rng.next(3);
  int v = 0;
  std::vector<std::vector<int>> cblocks =
      carve_blocks(rng, v, max_k - fresh_reserve, s);
  int hits = rng.next(4);  // 0..3 intersections
  std::set<int> cover_vertices;
  for (const auto& vs : cblocks) cover_vertices.insert(vs.begin(), vs.end());
  std::vector<int> hit_vertices;
  {
    std::vector<int> pool(cover_vertices.begin(), cover_vertices.end());
    for (int i = 0; i < hits && !pool.empty(); ++i) {
      int pick = rng.next(static_cast<int>(pool.size()));
      hit_vertices.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
  }
  // Path: fresh vertices interleaved with the chosen cover vertices.
  std::vector<int> pverts;
  pverts.push_back(rng.chance(1, 2) || hit_vertices.empty() ? v++
                                                            : hit_vertices[0]);
  bool used_first = !hit_vertices.empty() && pverts[0] == hit_vertices[0];
  std::size_t next_hit = used_first ? 1 : 0;
  while (next_hit < hit_vertices.size()) {
    if (rng.chance(1, 3)) pverts.push_back(v++);
    pverts.push_back(hit_vertices[next_hit++]);
  }
  if (rng.chance(1, 2)) pverts.push_back(v++);
  if (pverts.size() < 2) pverts.push_back(v++);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& vs : cblocks) {
    auto c = cycle_arcs(vs);
    arcs.insert(arcs.end(), c.begin(), c.end());
  }
  auto p = path_arcs(pverts);
  arcs.insert(arcs.end(), p.begin(), p.end());
  FamilyInstance f{instance_from_arcs(v, arcs), {}, {}};
  int item = 1;
  for (const auto& vs : cblocks) {
    f.cycles.push_back(label_arcs(f.instance, cycle_arcs(vs), item));
    item += static_cast<int>(vs.size());
  }
  f.paths.push_back(label_arcs(f.instance, p, item));
  return f;
}

// ------------------------------------------------------------------
// Brute-force oracles.

// Max-flow value by exhaustive minimum-cut enumeration.
inline long long min_cut_value(const FlowNetwork& net, int s, int t) {
  int n = net.node_count;
  long long best = -1;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!(mask & (1ull << s)) || (mask & (1ull << t))) continue;
    long long cap = 0;
    for (const auto& a : net.arcs)
      if ((mask & (1ull << a.tail)) && !(mask & (1ull << a.head)))
        cap += a.capacity;
    if (best < 0 || cap < best) best = cap;
  }
  return best;
}

// Minimum-cost circulation by enumerating every integral flow vector.
inline std::optional<long long> enumerate_min_cost_circulation(
    const FlowNetwork& net) {
  std::optional<long long> best;
  std::vector<int> flow(net.arcs.size(), 0);
  auto feasible_conservation = [&]() {
    std::vector<long long> balance(net.node_count, 0);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      balance[net.arcs[i].tail] -= flow[i];
      balance[net.arcs[i].head] += flow[i];
    }
    for (long long b : balance)
      if (b != 0) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == net.arcs.size()) {
      if (!feasible_conservation()) return;
      long long cost = 0;
      for (std::size_t j = 0; j < net.arcs.size(); ++j)
        cost += net.arcs[j].cost * flow[j];
      if (!best || cost < *best) best = cost;
      return;
    }
    for (int f = net.arcs[i].lower; f <= net.arcs[i].capacity; ++f) {
      flow[i] = f;
      self(self, i + 1);
    }
    flow[i] = net.arcs[i].lower;
  };
  rec(rec, 0);
  return best;
}

// All simple directed cycles of a labeled arc multiset (small inputs only).
inline std::vector<std::vector<Transfer>> all_simple_cycles(
    int k, const std::vector<Transfer>& arcs) {
  std::vector<std::vector<Transfer>> cycles;
  std::vector<Transfer> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Transfer> chain;
  std::set<int> on_path;
  auto rec = [&](auto&& self, int start, int cur) -> void {
    for (const Transfer& a : sorted) {
      if (a.from != cur) continue;
      if (a.to == start) {
        chain.push_back(a);
        // keep one canonical representative: smallest vertex first
        int least = chain.front().from;
        for (const Transfer& t : chain) least = std::min(least, t.from);
        if (chain.front().from == least) cycles.push_back(chain);
        chain.pop_back();
        continue;
      }
      if (on_path.count(a.to)) continue;
      chain.push_back(a);
      on_path.insert(a.to);
      self(self, start, a.to);
      on_path.erase(a.to);
      chain.pop_back();
    }
  };
  for (int v = 0; v < k; ++v) {
    chain.clear();
    on_path = {v};
    rec(rec, v, v);
  }
  // Deduplicate label sets (parallel arcs can repeat vertex sequences).
  std::set<std::vector<Transfer>> uniq(cycles.begin(), cycles.end());
  return {uniq.begin(), uniq.end()};
}

// Does some set of pairwise vertex-disjoint simple cycles of `arcs` cover
// `required`? Exhaustive over cycle subsets.
inline bool cover_exists_brute_force(int k, const std::vector<Transfer>& arcs,
                                     const std::vector<int>& required) {
  auto cycles = all_simple_cycles(k, arcs);
  std::size_t m = cycles.size();
  std::vector<std::set<int>> verts(m);
  std::vector<std::set<std::string>> labels(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const Transfer& a : cycles[i]) {
      verts[i].insert(a.from);
      labels[i].insert(a.item);
    }
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::set<int> covered;
    std::set<std::string> used;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask & (1ull << i))) continue;
      for (int vtx : verts[i]) ok &= covered.insert(vtx).second;
      for (const std::string& l : labels[i]) ok &= used.insert(l).second;
    }
    if (!ok) continue;
    bool all = true;
    for (int r : required) all &= covered.count(r) > 0;
    if (all) return true;
  }
  return false;
}

inline FlowNetwork random_network(Rng& rng, int nodes, int arcs, int max_cap,
                                  bool lowers, bool costs) {
  FlowNetwork net;
  net.node_count = nodes;
  for (int i = 0; i < arcs; ++i) {
    int u = rng.next(nodes);
    int v = rng.next(nodes);
    while (v == u) v = rng.next(nodes);
    int cap = 1 + rng.next(max_cap);
    int low = lowers ? rng.next(cap + 1) : 0;
    long long cost = costs ? rng.next(11) - 5 : 0;
    net.arcs.push_back(clusterwalk::FlowArc{u, v, low, cap, cost});
  }
  return net;
}

}  // namespace cwtest

#endif
