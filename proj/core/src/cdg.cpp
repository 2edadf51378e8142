#include "clusterwalk/cdg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace clusterwalk {

ClusteringDifferenceGraph::ClusteringDifferenceGraph(int k,
                                                     std::vector<Transfer> arcs)
    : k_(k), arcs_(std::move(arcs)) {
  if (k_ <= 0) throw ValidationError("cdg: k must be positive");
  std::unordered_set<std::string> labels;
  for (const Transfer& a : arcs_) {
    if (a.from == a.to)
      throw ValidationError("cdg: self-loop at cluster " +
                            std::to_string(a.from));
    if (a.from < 0 || a.from >= k_ || a.to < 0 || a.to >= k_)
      throw ValidationError("cdg: arc endpoint out of range");
    if (!labels.insert(a.item).second)
      throw ValidationError("cdg: duplicate arc label '" + a.item + "'");
  }
  std::sort(arcs_.begin(), arcs_.end());
}

ClusteringDifferenceGraph build_cdg(const Clustering& from,
                                    const Clustering& to) {
  if (!from.same_instance(to))
    throw MismatchedInstancesError(
        "clusterings do not describe the same instance");
  std::vector<Transfer> arcs;
  for (std::size_t i = 0; i < from.items().size(); ++i) {
    const std::string& item = from.items()[i];
    int a = from.assignment()[i];
    int b = to.cluster_of(item);
    if (a != b) arcs.push_back(Transfer{item, a, b});
  }
  return ClusteringDifferenceGraph(from.k(), std::move(arcs));
}

DegreeProfile degree_profile(const ClusteringDifferenceGraph& g) {
  DegreeProfile p;
  int k = g.k();
  p.indegree.assign(k, 0);
  p.outdegree.assign(k, 0);
  for (const Transfer& a : g.arcs()) {
    ++p.outdegree[a.from];
    ++p.indegree[a.to];
  }
  p.shared.resize(k);
  p.delta.resize(k);
  int delta_sum = 0;
  for (int i = 0; i < k; ++i) {
    p.shared[i] = std::min(p.indegree[i], p.outdegree[i]);
    p.delta[i] = std::abs(p.indegree[i] - p.outdegree[i]);
    delta_sum += p.delta[i];
  }
  p.half_delta_sum = delta_sum / 2;
  p.i1 = 0;
  for (int i = 1; i < k; ++i)
    if (p.shared[i] > p.shared[p.i1]) p.i1 = i;
  p.i2 = p.i1 == 0 ? (k > 1 ? 1 : 0) : 0;
  for (int i = 0; i < k; ++i)
    if (i != p.i1 && p.shared[i] > p.shared[p.i2]) p.i2 = i;
  p.eta_i1 = p.shared[p.i1];
  p.eta_i2 = p.i2 == p.i1 ? 0 : p.shared[p.i2];
  return p;
}

ClusteringDifferenceGraph residual(const ClusteringDifferenceGraph& g,
                                   const Move& m, const Clustering& current,
                                   const Clustering& target) {
  // Each moved item either reaches its target cluster (arc vanishes) or a
  // new wrong one (arc re-roots at the new location).
  std::unordered_map<std::string, Transfer> by_item;
  for (const Transfer& a : g.arcs()) by_item.emplace(a.item, a);
  for (const Transfer& t : m.transfers()) {
    int idx = current.item_index(t.item);
    if (idx < 0 || current.assignment()[idx] != t.from)
      throw ItemNotInSourceError("item '" + t.item + "' is not in cluster " +
                                 std::to_string(t.from));
    int dest = target.cluster_of(t.item);
    if (t.to == dest) {
      by_item.erase(t.item);
    } else {
      by_item.insert_or_assign(t.item, Transfer{t.item, t.to, dest});
    }
  }
  std::vector<Transfer> arcs;
  arcs.reserve(by_item.size());
  for (auto& [item, arc] : by_item) arcs.push_back(arc);
  return ClusteringDifferenceGraph(g.k(), std::move(arcs));
}

std::string to_dot(const ClusteringDifferenceGraph& g) {
  std::ostringstream out;
  out << "digraph cdg {\n";
  for (int i = 0; i < g.k(); ++i)
    out << "  c" << (i + 1) << ";\n";
  for (const Transfer& a : g.arcs())
    out << "  c" << (a.from + 1) << " -> c" << (a.to + 1) << " [label=\""
        << a.item << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace clusterwalk
