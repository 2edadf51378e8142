#include <doctest.h>

#include <map>
#include <set>

#include "clusterwalk/decompose.hpp"
#include "clusterwalk/generate.hpp"
#include "support.hpp"

using namespace clusterwalk;

namespace {

const auto kStrategies = {DecomposeStrategy::GreedyPathsFirst,
                          DecomposeStrategy::GreedyCyclesFirst,
                          DecomposeStrategy::MaxCycleEdges};

std::multiset<std::string> arc_labels(
    const std::vector<std::vector<Transfer>>& parts) {
  std::multiset<std::string> out;
  for (const auto& part : parts)
    for (const Transfer& t : part) out.insert(t.item);
  return out;
}

void check_decomposition_shape(const ClusteringDifferenceGraph& g,
                               const PathCycleDecomposition& d) {
  DegreeProfile p = degree_profile(g);
  CHECK(static_cast<int>(d.paths.size()) == p.half_delta_sum);

  // The parts partition the arc multiset exactly.
  std::multiset<std::string> seen = arc_labels(d.paths);
  for (const std::string& s : arc_labels(d.cycles)) seen.insert(s);
  std::multiset<std::string> expect;
  for (const Transfer& t : g.arcs()) expect.insert(t.item);
  CHECK(seen == expect);

  // Paths are simple and run from excess to deficit vertices; removal order
  // keeps intermediate degrees consistent, so checking against the original
  // profile needs only endpoint counts.
  std::map<int, int> starts, ends;
  for (const auto& path : d.paths) {
    std::set<int> verts;
    verts.insert(path.front().from);
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) CHECK(path[i - 1].to == path[i].from);
      CHECK(verts.insert(path[i].to).second);
    }
    ++starts[path.front().from];
    ++ends[path.back().to];
  }
  for (int v = 0; v < g.k(); ++v) {
    int excess = std::max(p.outdegree[v] - p.indegree[v], 0);
    int deficit = std::max(p.indegree[v] - p.outdegree[v], 0);
    CHECK(starts[v] == excess);
    CHECK(ends[v] == deficit);
  }

  // The cycle side is a disjoint union of simple cycles, hence balanced.
  std::map<int, int> in, out;
  for (const auto& cycle : d.cycles) {
    CHECK(cycle.size() >= 2);
    CHECK(cycle.back().to == cycle.front().from);
    std::set<int> verts;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) CHECK(cycle[i - 1].to == cycle[i].from);
      CHECK(verts.insert(cycle[i].from).second);
      ++in[cycle[i].to];
      ++out[cycle[i].from];
    }
  }
  for (const auto& [v, o] : out) CHECK(in[v] == o);
}

}  // namespace

TEST_CASE("figure-2b path CDG decomposes into one path and no cycles") {
  auto inst = cwtest::instance_from_arcs(5, cwtest::path_arcs({0, 1, 2, 3, 4}));
  ClusteringDifferenceGraph g = build_cdg(inst.source, inst.target);
  for (auto strategy : kStrategies) {
    PathCycleDecomposition d = path_cycle_decompose(g, strategy);
    CHECK(d.paths.size() == 1);
    CHECK(d.paths[0].size() == 4);
    CHECK(d.cycles.empty());
  }
}

TEST_CASE("figure-3 CDG decomposes into its four cycles") {
  auto arcs = cwtest::cycle_arcs({0, 1, 2, 3});
  for (auto block : {cwtest::cycle_arcs({4, 5, 6, 7, 8}),
                     cwtest::cycle_arcs({9, 10, 11, 12, 13}),
                     cwtest::cycle_arcs({14, 15})})
    arcs.insert(arcs.end(), block.begin(), block.end());
  auto inst = cwtest::instance_from_arcs(16, arcs);
  ClusteringDifferenceGraph g = build_cdg(inst.source, inst.target);
  for (auto strategy : kStrategies) {
    PathCycleDecomposition d = path_cycle_decompose(g, strategy);
    CHECK(d.paths.empty());
    CHECK(d.cycles.size() == 4);
  }
}

TEST_CASE("figure-5 CDG: one path, two cycles under any strategy") {
  auto arcs = cwtest::path_arcs({0, 1, 2});
  for (auto block :
       {cwtest::cycle_arcs({3, 4, 5, 6, 7}), cwtest::cycle_arcs({8, 9, 10, 11, 12})})
    arcs.insert(arcs.end(), block.begin(), block.end());
  auto inst = cwtest::instance_from_arcs(13, arcs);
  ClusteringDifferenceGraph g = build_cdg(inst.source, inst.target);
  for (auto strategy : kStrategies) {
    PathCycleDecomposition d = path_cycle_decompose(g, strategy);
    CHECK(d.paths.size() == 1);
    CHECK(d.cycles.size() == 2);
  }
}

TEST_CASE("decomposition properties on random CDGs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto [a, b] = random_clustering_pair(4 + seed % 14, 2 + seed % 7, seed);
    ClusteringDifferenceGraph g = build_cdg(a, b);
    for (auto strategy : kStrategies)
      check_decomposition_shape(g, path_cycle_decompose(g, strategy));
    // Max-cycle-edges beats (or ties) both greedy strategies.
    auto cycle_arc_count = [&](DecomposeStrategy s) {
      return arc_labels(path_cycle_decompose(g, s).cycles).size();
    };
    std::size_t best = cycle_arc_count(DecomposeStrategy::MaxCycleEdges);
    CHECK(best >= cycle_arc_count(DecomposeStrategy::GreedyPathsFirst));
    CHECK(best >= cycle_arc_count(DecomposeStrategy::GreedyCyclesFirst));
  }
}

TEST_CASE("decomposition is deterministic") {
  auto [a, b] = random_clustering_pair(14, 5, 42);
  ClusteringDifferenceGraph g = build_cdg(a, b);
  for (auto strategy : kStrategies) {
    PathCycleDecomposition d1 = path_cycle_decompose(g, strategy);
    PathCycleDecomposition d2 = path_cycle_decompose(g, strategy);
    CHECK(d1.paths == d2.paths);
    CHECK(d1.cycles == d2.cycles);
  }
}

TEST_CASE("disjoint_cycle_cover: figure-3 cycles cover themselves") {
  auto arcs = cwtest::cycle_arcs({0, 1, 2, 3});
  for (auto block : {cwtest::cycle_arcs({4, 5, 6, 7, 8}),
                     cwtest::cycle_arcs({9, 10, 11, 12, 13}),
                     cwtest::cycle_arcs({14, 15})})
    arcs.insert(arcs.end(), block.begin(), block.end());
  auto inst = cwtest::instance_from_arcs(16, arcs);
  ClusteringDifferenceGraph g = build_cdg(inst.source, inst.target);
  std::vector<int> required(16);
  for (int i = 0; i < 16; ++i) required[i] = i;
  CycleCover cover = disjoint_cycle_cover(16, g.arcs(), required);
  CHECK(cover.cycles.size() == 4);
  CHECK(cover.covered.size() == 16);
}

TEST_CASE("disjoint_cycle_cover: single cycle covers any subset") {
  auto inst = cwtest::instance_from_arcs(4, cwtest::cycle_arcs({0, 1, 2, 3}));
  ClusteringDifferenceGraph g = build_cdg(inst.source, inst.target);
  CycleCover cover = disjoint_cycle_cover(4, g.arcs(), {1, 3});
  CHECK(cover.cycles.size() == 1);
  CHECK(cover.cycles[0].size() == 4);
}

TEST_CASE("disjoint_cycle_cover: overlapping 2-cycles pick exactly one") {
  // Two 2-cycles through a shared vertex 0: covering {0} must use one of
  // them, never both. Enumerated oracle agrees a cover exists.
  std::vector<Transfer> dy = {{"a", 0, 1}, {"b", 1, 0}, {"c", 0, 2}, {"d", 2, 0}};
  CHECK(cwtest::cover_exists_brute_force(3, dy, {0}));
  CycleCover cover = disjoint_cycle_cover(3, dy, {0});
  REQUIRE(cover.cycles.size() == 1);
  CHECK(cover.cycles[0].size() == 2);
  CHECK(cover.cycles[0][0].from == 0);
}

TEST_CASE("disjoint_cycle_cover agrees with brute force on random balanced graphs") {
  Rng rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    // Build a balanced pool by unioning random cycles over few vertices,
    // which forces plenty of vertex sharing.
    int k = 3 + rng.next(3);
    std::vector<Transfer> dy;
    int item = 0;
    int cycles = 1 + rng.next(3);
    for (int c = 0; c < cycles; ++c) {
      int len = 2 + rng.next(static_cast<int>(k) - 1);
      std::vector<int> vs;
      for (int v = 0; v < k && static_cast<int>(vs.size()) < len; ++v)
        if (rng.chance(2, 3)) vs.push_back(v);
      if (vs.size() < 2) continue;
      for (std::size_t i = 0; i < vs.size(); ++i)
        dy.push_back(Transfer{"y" + std::to_string(item++), vs[i],
                              vs[(i + 1) % vs.size()]});
    }
    if (dy.empty()) continue;
    std::vector<int> out_deg(k, 0);
    for (const Transfer& t : dy) ++out_deg[t.from];
    int best = *std::max_element(out_deg.begin(), out_deg.end());
    std::vector<int> required;
    for (int v = 0; v < k; ++v)
      if (out_deg[v] == best) required.push_back(v);
    bool expect = cwtest::cover_exists_brute_force(k, dy, required);
    try {
      CycleCover cover = disjoint_cycle_cover(k, dy, required);
      CHECK(expect);
      // Structure: vertex-disjoint simple cycles covering the required set,
      // arcs drawn from dy without reuse.
      std::set<int> verts;
      std::set<std::string> used;
      for (const auto& cyc : cover.cycles) {
        CHECK(cyc.back().to == cyc.front().from);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          if (i > 0) CHECK(cyc[i - 1].to == cyc[i].from);
          CHECK(verts.insert(cyc[i].from).second);
          CHECK(used.insert(cyc[i].item).second);
          CHECK(std::count(dy.begin(), dy.end(), cyc[i]) == 1);
        }
      }
      for (int r : required) CHECK(verts.count(r) == 1);
    } catch (const CoverInfeasibleError&) {
      CHECK(!expect);
    }
  }
}
