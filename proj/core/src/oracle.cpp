#include "clusterwalk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>

#include "arc_util.hpp"

namespace clusterwalk {

namespace {

constexpr int kMaxItems = 8;
constexpr int kMaxClusters = 5;

void check_guard(const Clustering& c, bool force) {
  if (force) return;
  if (c.size() > kMaxItems || c.k() > kMaxClusters)
    throw InstanceTooLargeError(
        "exhaustive search is guarded to n <= 8, k <= 5 (pass force to "
        "override)");
}

struct RawTransfer {
  int item;  // index into the item list
  int from;
  int to;
};

// Enumerates every move available from `assign` and hands each to `sink`.
// Items within a cluster are offered in item-name order.
template <typename Sink>
void for_each_move(const std::vector<int>& assign, int k,
                   const std::vector<std::string>& items,
                   const std::optional<SizeBounds>& bounds, Sink&& sink) {
  int n = static_cast<int>(assign.size());
  std::vector<std::vector<int>> contents(k);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return items[a] < items[b]; });
  for (int i : order) contents[assign[i]].push_back(i);

  std::vector<int> seq;       // cluster sequence
  std::vector<bool> used(k);  // clusters on seq
  std::vector<RawTransfer> transfers;

  // Fills in item choices for the arcs of the committed cluster sequence.
  auto emit_items = [&](auto&& self, std::size_t arc, bool cyclical) -> void {
    std::size_t arcs = cyclical ? seq.size() : seq.size() - 1;
    if (arc == arcs) {
      sink(transfers, cyclical);
      return;
    }
    int from = seq[arc];
    int to = seq[(arc + 1) % seq.size()];
    for (int item : contents[from]) {
      transfers.push_back(RawTransfer{item, from, to});
      self(self, arc + 1, cyclical);
      transfers.pop_back();
    }
  };

  auto sequential_ok = [&]() {
    if (!bounds) return true;
    int head = seq.front(), tail = seq.back();
    int head_size = static_cast<int>(contents[head].size());
    int tail_size = static_cast<int>(contents[tail].size());
    return head_size - 1 >= bounds->lower()[head] &&
           tail_size + 1 <= bounds->upper()[tail];
  };

  auto extend = [&](auto&& self) -> void {
    int cur = seq.back();
    if (contents[cur].empty()) return;  // nothing to send onward
    for (int next = 0; next < k; ++next) {
      if (used[next]) continue;
      seq.push_back(next);
      used[next] = true;
      if (sequential_ok()) emit_items(emit_items, 0, false);
      self(self);
      used[next] = false;
      seq.pop_back();
    }
    // Cyclical closure: canonical form keeps the smallest cluster in front.
    if (seq.size() >= 2 &&
        *std::min_element(seq.begin(), seq.end()) == seq.front())
      emit_items(emit_items, 0, true);
  };

  for (int start = 0; start < k; ++start) {
    if (contents[start].empty()) continue;
    seq.assign(1, start);
    std::fill(used.begin(), used.end(), false);
    used[start] = true;
    extend(extend);
  }
}

Move raw_to_move(const std::vector<RawTransfer>& raw, bool cyclical,
                 const std::vector<std::string>& items) {
  std::vector<Transfer> transfers;
  transfers.reserve(raw.size());
  for (const RawTransfer& t : raw)
    transfers.push_back(Transfer{items[t.item], t.from, t.to});
  return Move(cyclical ? MoveKind::Cyclical : MoveKind::Sequential,
              std::move(transfers));
}

std::uint64_t encode(const std::vector<int>& assign, int k) {
  std::uint64_t code = 0;
  for (int i = static_cast<int>(assign.size()) - 1; i >= 0; --i)
    code = code * k + assign[i];
  return code;
}

// Recovers the move between two adjacent assignments from their diff; the
// moved items always chain into one simple path or cycle.
Move diff_to_move(const std::vector<int>& before, const std::vector<int>& after,
                  const std::vector<std::string>& items) {
  std::map<int, Transfer> by_from;
  std::map<int, int> indegree;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] == after[i]) continue;
    by_from.emplace(before[i], Transfer{items[i], before[i], after[i]});
    ++indegree[after[i]];
  }
  int start = -1;
  for (const auto& [from, t] : by_from)
    if (indegree.find(from) == indegree.end()) start = from;
  bool cyclical = start < 0;
  if (cyclical) start = by_from.begin()->first;
  std::vector<Transfer> chain;
  int cur = start;
  while (chain.size() < by_from.size()) {
    const Transfer& t = by_from.at(cur);
    chain.push_back(t);
    cur = t.to;
  }
  return Move(cyclical ? MoveKind::Cyclical : MoveKind::Sequential,
              std::move(chain));
}

}  // namespace

std::vector<Move> enumerate_moves(const Clustering& c,
                                  const std::optional<SizeBounds>& bounds,
                                  bool force) {
  check_guard(c, force);
  if (bounds && bounds->k() != c.k())
    throw ValidationError("enumerate_moves: bounds k differs from instance");
  std::vector<Move> moves;
  for_each_move(c.assignment(), c.k(), c.items(), bounds,
                [&](const std::vector<RawTransfer>& raw, bool cyclical) {
                  moves.push_back(raw_to_move(raw, cyclical, c.items()));
                });
  return moves;
}

ExactDistance exact_distance(const Clustering& from, const Clustering& to,
                             const std::optional<SizeBounds>& bounds,
                             bool force) {
  if (!from.same_instance(to))
    throw MismatchedInstancesError(
        "exact_distance: endpoints describe different instances");
  check_guard(from, force);
  if (bounds && bounds->k() != from.k())
    throw ValidationError("exact_distance: bounds k differs from instance");
  if (bounds &&
      (!validate_clustering(from, bounds).ok || !validate_clustering(to, bounds).ok))
    throw InfeasibleEndpointsError(
        "exact_distance: an endpoint violates the size bounds");

  ExactDistance result{0, TransformationPlan{from, to, {}, bounds}};
  if (from == to) return result;

  int k = from.k();
  const std::vector<std::string>& items = from.items();
  std::vector<int> start_assign = from.assignment();
  std::vector<int> target_assign(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    target_assign[i] = to.cluster_of(items[i]);
  std::uint64_t start = encode(start_assign, k);
  std::uint64_t target = encode(target_assign, k);

  std::unordered_map<std::uint64_t, std::uint64_t> parent;
  std::unordered_map<std::uint64_t, std::vector<int>> decoded;
  std::deque<std::uint64_t> frontier{start};
  parent.emplace(start, start);
  decoded.emplace(start, start_assign);
  int depth = 0;
  bool found = false;
  while (!frontier.empty() && !found) {
    ++depth;
    std::deque<std::uint64_t> next;
    for (std::uint64_t state : frontier) {
      const std::vector<int>& assign = decoded.at(state);
      bool done = false;
      for_each_move(
          assign, k, items, bounds,
          [&](const std::vector<RawTransfer>& raw, bool) {
            if (done) return;
            std::vector<int> moved = assign;
            for (const RawTransfer& t : raw) moved[t.item] = t.to;
            std::uint64_t code = encode(moved, k);
            if (parent.count(code)) return;
            parent.emplace(code, state);
            decoded.emplace(code, moved);
            if (code == target) done = true;
            next.push_back(code);
          });
      if (done) {
        found = true;
        break;
      }
    }
    frontier = std::move(next);
  }
  if (!found) {
    if (bounds)
      throw UnreachableError(
          "no bounded walk joins the endpoints inside the size bounds");
    throw Error("exact_distance: search space exhausted (bug)");
  }

  std::vector<std::uint64_t> chain{target};
  while (chain.back() != start) chain.push_back(parent.at(chain.back()));
  std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    result.plan.moves.push_back(
        diff_to_move(decoded.at(chain[i]), decoded.at(chain[i + 1]), items));
  result.distance = static_cast<int>(result.plan.moves.size());
  return result;
}

bool is_single_circuit(const ClusteringDifferenceGraph& g) {
  if (g.empty()) return false;
  std::map<int, int> out;
  std::map<int, int> in;
  for (const Transfer& a : g.arcs()) {
    if (++out[a.from] > 1) return false;
    if (++in[a.to] > 1) return false;
  }
  // In/out degree at most one everywhere: the arcs split into disjoint
  // simple paths and cycles; a single component must then hold every arc.
  std::map<int, const Transfer*> by_from;
  for (const Transfer& a : g.arcs()) by_from[a.from] = &a;
  int start = -1;
  for (const Transfer& a : g.arcs())
    if (in.find(a.from) == in.end()) start = a.from;
  if (start < 0) start = g.arcs().front().from;  // all balanced: a cycle
  std::size_t walked = 0;
  int cur = start;
  while (true) {
    auto it = by_from.find(cur);
    if (it == by_from.end()) break;
    ++walked;
    cur = it->second->to;
    if (cur == start) break;
    if (walked > g.arcs().size()) break;
  }
  return walked == g.arcs().size();
}

}  // namespace clusterwalk
