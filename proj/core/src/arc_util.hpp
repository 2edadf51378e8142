#ifndef CLUSTERWALK_ARC_UTIL_HPP
#define CLUSTERWALK_ARC_UTIL_HPP

// Internal helpers for working with arc-lists that form simple directed
// paths and cycles over cluster vertices.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "clusterwalk/model.hpp"

namespace clusterwalk::detail {

// Vertices of a chain in visit order; for a cycle the closing repeat is
// dropped.
inline std::vector<int> chain_vertices(const std::vector<Transfer>& arcs,
                                       bool cycle) {
  std::vector<int> out;
  if (arcs.empty()) return out;
  out.push_back(arcs.front().from);
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i) out.push_back(arcs[i].to);
  if (!cycle) out.push_back(arcs.back().to);
  return out;
}

inline bool is_chain(const std::vector<Transfer>& arcs) {
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
    if (arcs[i].to != arcs[i + 1].from) return false;
  return true;
}

inline bool is_simple_path(const std::vector<Transfer>& arcs) {
  if (arcs.empty() || !is_chain(arcs)) return false;
  std::vector<int> v = chain_vertices(arcs, false);
  std::set<int> s(v.begin(), v.end());
  return s.size() == v.size();
}

inline bool is_simple_cycle(const std::vector<Transfer>& arcs) {
  if (arcs.size() < 2 || !is_chain(arcs)) return false;
  if (arcs.back().to != arcs.front().from) return false;
  std::vector<int> v = chain_vertices(arcs, true);
  std::set<int> s(v.begin(), v.end());
  return s.size() == v.size();
}

// Rotates a cycle's arc list so it starts at its smallest vertex.
inline std::vector<Transfer> canonical_cycle(std::vector<Transfer> arcs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i].from < arcs[best].from) best = i;
  std::rotate(arcs.begin(), arcs.begin() + best, arcs.end());
  return arcs;
}

// Position of vertex v on the cycle, or -1.
inline int cycle_position(const std::vector<Transfer>& cycle, int v) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i].from == v) return static_cast<int>(i);
  return -1;
}

inline const Transfer& arc_leaving(const std::vector<Transfer>& cycle, int v) {
  return cycle[cycle_position(cycle, v)];
}

inline const Transfer& arc_entering(const std::vector<Transfer>& cycle, int v) {
  for (const Transfer& a : cycle)
    if (a.to == v) return a;
  return cycle.front();  // unreachable for cycle members
}

// Arcs of the cycle walked forward from `from` up to (not including) the arc
// leaving `to`. traverse(c, v, v) is empty; traverse over the whole cycle is
// expressed as cycle-minus-the-arc-entering-`from`.
inline std::vector<Transfer> traverse(const std::vector<Transfer>& cycle,
                                      int from, int to) {
  std::vector<Transfer> out;
  int cur = from;
  while (cur != to) {
    const Transfer& a = arc_leaving(cycle, cur);
    out.push_back(a);
    cur = a.to;
  }
  return out;
}

// Deterministic ordering key for whole components.
inline bool component_less(const std::vector<Transfer>& a,
                           const std::vector<Transfer>& b) {
  if (a.front().from != b.front().from) return a.front().from < b.front().from;
  return a.front().item < b.front().item;
}

}  // namespace clusterwalk::detail

#endif
