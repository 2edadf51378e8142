#include "clusterwalk/planner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "arc_util.hpp"
#include "clusterwalk/doublemoves.hpp"

namespace clusterwalk {

BoundReport bounds(const Clustering& from, const Clustering& to) {
  DegreeProfile p = degree_profile(build_cdg(from, to));
  BoundReport r;
  r.lower = p.half_delta_sum;
  r.naive_upper = p.eta_i1 + p.eta_i2 + p.half_delta_sum;
  r.improved_upper = p.eta_i1 + std::max(p.eta_i2, p.half_delta_sum);
  r.i1 = p.i1;
  r.i2 = p.i2;
  return r;
}

namespace {

using detail::chain_vertices;

// One pending sequential piece: an original path of at most three vertices
// (split_id < 0), or a long path tracked through its split's lifecycle.
struct PathEntry {
  int split_id = -1;
  std::vector<Transfer> arcs;
};

// D_Y as a mutable arc pool; artificial arcs remember their split.
struct DyArc {
  Transfer arc;
  int split_id = -1;
};

class CoreBuilder {
 public:
  CoreBuilder(Clustering current, const Clustering& target,
              const PlannerOptions& options,
              std::optional<SizeBounds> size_bounds,
              std::vector<Move>& sink)
      : current_(std::move(current)),
        target_(target),
        options_(options),
        size_bounds_(std::move(size_bounds)),
        moves_(sink) {}

  void run() {
    ClusteringDifferenceGraph cdg = build_cdg(current_, target_);
    if (cdg.empty()) return;
    PathCycleDecomposition decomp =
        path_cycle_decompose(cdg, options_.strategy);

    if (components_disjoint(decomp)) {
      for (const Move& m :
           integrate_disjoint_paths_and_cycles(decomp.paths, decomp.cycles))
        emit(m);
      return;
    }

    // General machinery: split long paths, push their interior cycles
    // into D_Y, then alternate shared-degree reductions and cover rounds.
    for (const auto& path : decomp.paths) {
      PathEntry e;
      if (path.size() >= 3) {
        splits_.emplace_back(path);
        e.split_id = static_cast<int>(splits_.size()) - 1;
        Transfer artificial = splits_.back().artificial_edge();
        for (const Transfer& arc : splits_.back().cycle())
          dy_.push_back(DyArc{arc, arc == artificial ? e.split_id : -1});
      } else {
        e.arcs = path;
      }
      entries_.push_back(std::move(e));
    }
    for (const auto& cycle : decomp.cycles)
      for (const Transfer& arc : cycle) dy_.push_back(DyArc{arc, -1});

    while (!dy_.empty()) {
      check_invariants();
      std::vector<int> at_max = max_shared_vertices();
      if (at_max.size() == 1) {
        reduction_move(at_max[0]);
        continue;
      }
      cover_round(at_max);
    }
    leftover_paths();
    check_invariants();
  }

 private:
  Clustering current_;
  const Clustering& target_;
  const PlannerOptions& options_;
  std::optional<SizeBounds> size_bounds_;
  std::vector<Move>& moves_;
  std::vector<PathEntry> entries_;
  std::deque<PathSplit> splits_;
  std::vector<DyArc> dy_;

  std::vector<Transfer> entry_arcs(const PathEntry& e) const {
    return e.split_id >= 0 ? splits_[e.split_id].short_path() : e.arcs;
  }

  bool entry_less(const PathEntry& a, const PathEntry& b) const {
    std::vector<Transfer> aa = entry_arcs(a), bb = entry_arcs(b);
    if (aa.front().from != bb.front().from)
      return aa.front().from < bb.front().from;
    return aa.front().item < bb.front().item;
  }

  void emit(const Move& m) {
    current_ = apply_move(current_, m);
    moves_.push_back(m);
    if (options_.on_step && !options_.on_step(moves_.size() - 1, m))
      throw PlanCancelledError("planning cancelled by step callback");
  }

  bool components_disjoint(const PathCycleDecomposition& d) const {
    std::set<int> seen;
    for (const auto& p : d.paths)
      for (int v : chain_vertices(p, false))
        if (!seen.insert(v).second) return false;
    for (const auto& c : d.cycles)
      for (int v : chain_vertices(c, true))
        if (!seen.insert(v).second) return false;
    return true;
  }

  // D_Y stays balanced, so the shared degree of a vertex is its outdegree.
  std::vector<int> max_shared_vertices() const {
    std::vector<int> out_deg(current_.k(), 0);
    for (const DyArc& a : dy_) ++out_deg[a.arc.from];
    int best = 0;
    for (int d : out_deg) best = std::max(best, d);
    std::vector<int> at;
    for (int v = 0; v < current_.k(); ++v)
      if (out_deg[v] == best && best > 0) at.push_back(v);
    return at;
  }

  std::vector<Transfer> dy_arcs() const {
    std::vector<Transfer> arcs;
    arcs.reserve(dy_.size());
    for (const DyArc& a : dy_) arcs.push_back(a.arc);
    return arcs;
  }

  // Removes arcs from D_Y; any split whose artificial edge goes (except the
  // one being integrated right now) flips its interior onto w_2.
  void consume(const std::vector<Transfer>& arcs, int integrated_split) {
    for (const Transfer& t : arcs) {
      auto it = std::find_if(dy_.begin(), dy_.end(),
                             [&](const DyArc& a) { return a.arc == t; });
      if (it == dy_.end())
        throw Error("planner: consumed arc missing from D_Y");
      if (it->split_id >= 0 && it->split_id != integrated_split)
        splits_[it->split_id].mark_cycle_applied();
      dy_.erase(it);
    }
  }

  // Lexicographically smallest shortest cycle through v in D_Y.
  std::vector<Transfer> shortest_cycle_through(int v) const {
    int k = current_.k();
    std::vector<Transfer> sorted = dy_arcs();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> dist(k, -1);  // arc-distance to v
    dist[v] = 0;
    std::deque<int> q{v};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (const Transfer& a : sorted)
        if (a.to == x && dist[a.from] < 0) {
          dist[a.from] = dist[x] + 1;
          q.push_back(a.from);
        }
    }
    int best = -1;
    for (const Transfer& a : sorted)
      if (a.from == v && dist[a.to] >= 0)
        best = best < 0 ? dist[a.to] + 1 : std::min(best, dist[a.to] + 1);
    if (best < 0) throw Error("planner: no cycle through max-degree vertex");
    std::vector<Transfer> cycle;
    int cur = v;
    int remaining = best;
    while (remaining > 0) {
      bool stepped = false;
      for (const Transfer& a : sorted) {
        if (a.from != cur) continue;
        bool closes = remaining == 1 && a.to == v;
        bool descends = remaining > 1 && dist[a.to] == remaining - 1;
        if (closes || descends) {
          cycle.push_back(a);
          cur = a.to;
          --remaining;
          stepped = true;
          break;
        }
      }
      if (!stepped) throw Error("planner: cycle reconstruction failed");
    }
    return cycle;
  }

  void reduction_move(int v) {
    std::vector<Transfer> cycle = shortest_cycle_through(v);
    emit(Move(MoveKind::Cyclical, cycle));
    consume(cycle, -1);
  }

  void cover_round(const std::vector<int>& required) {
    CycleCover cover = disjoint_cycle_cover(current_.k(), dy_arcs(), required);
    std::vector<Transfer> cover_arcs;
    for (const auto& c : cover.cycles)
      cover_arcs.insert(cover_arcs.end(), c.begin(), c.end());

    if (entries_.empty()) {
      for (const Move& m : integrate_disjoint_cycles(cover.cycles)) emit(m);
      consume(cover_arcs, -1);
      return;
    }

    // Candidate order: splits whose artificial edge sits in the cover first
    // (the modified double-moves must handle those), then the rest, each
    // group in canonical path order.
    std::set<Transfer> in_cover(cover_arcs.begin(), cover_arcs.end());
    auto is_artificial = [&](const PathEntry& e) {
      return e.split_id >= 0 &&
             in_cover.count(splits_[e.split_id].artificial_edge()) > 0;
    };
    std::vector<std::size_t> order(entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       bool fa = is_artificial(entries_[a]);
                       bool fb = is_artificial(entries_[b]);
                       if (fa != fb) return fa;
                       return entry_less(entries_[a], entries_[b]);
                     });

    std::vector<int> sizes = current_.cluster_sizes();
    std::optional<BoundedContext> ctx;
    if (size_bounds_) ctx = BoundedContext{&*size_bounds_, &sizes};

    for (std::size_t idx : order) {
      PathEntry& entry = entries_[idx];
      bool artificial = is_artificial(entry);
      PathIntegration integ;
      try {
        integ = artificial ? integrate_artificial_path(splits_[entry.split_id],
                                                       cover.cycles, ctx)
                           : integrate_path(entry_arcs(entry), cover.cycles,
                                            ctx);
      } catch (const NoSlackVertexError&) {
        continue;  // try another pending path, or fall back below
      }
      if (!integ.residual_arcs.empty())
        throw Error("planner: unexpected residual from a short path");
      for (const Move& m : integ.moves) emit(m);
      consume(cover_arcs, artificial ? entry.split_id : -1);
      if (!artificial && entry.split_id >= 0 &&
          splits_[entry.split_id].state() == PathSplit::State::Unapplied) {
        // Short path went first: its artificial edge, still in D_Y, now
        // carries x_2 and behaves like an ordinary arc.
        int id = entry.split_id;
        Transfer before = splits_[id].artificial_edge();
        splits_[id].mark_path_applied();
        Transfer after = splits_[id].artificial_edge();
        for (DyArc& a : dy_)
          if (a.split_id == id && a.arc == before) {
            a.arc = after;
            a.split_id = -1;
          }
      }
      entries_.erase(entries_.begin() + idx);
      return;
    }
    // Every pending path needed a parking spot and none had slack: spend the
    // round on the cycles alone.
    for (const Move& m : integrate_disjoint_cycles(cover.cycles)) emit(m);
    consume(cover_arcs, -1);
  }

  void leftover_paths() {
    std::sort(entries_.begin(), entries_.end(),
              [&](const PathEntry& a, const PathEntry& b) {
                return entry_less(a, b);
              });
    for (const PathEntry& e : entries_) {
      if (e.split_id >= 0 &&
          splits_[e.split_id].state() == PathSplit::State::Unapplied)
        throw Error("planner: split path left with pending artificial edge");
      emit(Move(MoveKind::Sequential, entry_arcs(e)));
    }
    entries_.clear();
  }

  // Every tracked arc's item must sit in its tail cluster; catches
  // bookkeeping slips right where they happen.
  void check_invariants() const {
    for (const DyArc& a : dy_)
      if (current_.cluster_of(a.arc.item) != a.arc.from)
        throw Error("planner: D_Y arc out of sync for item '" + a.arc.item +
                    "'");
    for (const PathEntry& e : entries_)
      for (const Transfer& t : entry_arcs(e))
        if (current_.cluster_of(t.item) != t.from)
          throw Error("planner: path arc out of sync for item '" + t.item +
                      "'");
  }
};

}  // namespace

TransformationPlan plan(const Clustering& from, const Clustering& to,
                        const PlannerOptions& options) {
  if (!from.same_instance(to))
    throw MismatchedInstancesError(
        "plan: endpoints describe different instances");
  TransformationPlan result{from, to, {}, std::nullopt};
  CoreBuilder builder(from, to, options, std::nullopt, result.moves);
  builder.run();
  std::vector<Clustering> trace = apply_plan(from, result, false);
  if (!(trace.back() == to)) throw Error("plan: replay mismatch (bug)");
  return result;
}

namespace {

// Moves items off upper-bound-tight clusters until at most one remains
// tight. Emits one single-transfer sequential move per adjustment.
std::vector<Move> preprocess_tight_clusters(Clustering& c, const SizeBounds& b,
                                            std::vector<std::string>& warnings,
                                            const char* side) {
  std::vector<Move> moves;
  for (;;) {
    std::vector<int> sizes = c.cluster_sizes();
    std::vector<int> tight;
    for (int i = 0; i < c.k(); ++i)
      if (sizes[i] == b.upper()[i]) tight.push_back(i);
    if (tight.size() <= 1) break;
    int j = -1;
    for (int i : tight)
      if (b.upper()[i] > b.lower()[i]) {
        j = i;
        break;
      }
    if (j < 0) {
      warnings.push_back(std::string(side) +
                         ": every tight cluster has fixed size; "
                         "pre-processing stopped early");
      break;
    }
    int dest = -1;
    for (int i = 0; i < c.k(); ++i)
      if (sizes[i] <= b.upper()[i] - 2) {
        dest = i;
        break;
      }
    if (dest < 0) {
      warnings.push_back(std::string(side) +
                         ": no cluster two below its upper bound; "
                         "pre-processing stopped early");
      break;
    }
    std::string item;
    for (std::size_t idx = 0; idx < c.items().size(); ++idx)
      if (c.assignment()[idx] == j && (item.empty() || c.items()[idx] < item))
        item = c.items()[idx];
    Move m(MoveKind::Sequential, {Transfer{item, j, dest}});
    c = apply_move(c, m);
    moves.push_back(std::move(m));
  }
  return moves;
}

}  // namespace

BoundedPlanResult plan_bounded(const Clustering& from, const Clustering& to,
                               const SizeBounds& b,
                               const PlannerOptions& options) {
  if (!from.same_instance(to))
    throw MismatchedInstancesError(
        "plan_bounded: endpoints describe different instances");
  if (b.k() != from.k())
    throw ValidationError("plan_bounded: bounds k differs from instance k");
  if (!validate_clustering(from, b).ok || !validate_clustering(to, b).ok)
    throw InfeasibleEndpointsError(
        "plan_bounded: an endpoint violates the size bounds");

  BoundedPlanResult result{TransformationPlan{from, to, {}, b}, false, {}};
  int n = from.size();
  long long upper_sum = 0;
  int i1 = 0;
  for (int i = 0; i < b.k(); ++i) {
    upper_sum += b.upper()[i];
    if (b.upper()[i] - b.lower()[i] < b.upper()[i1] - b.lower()[i1]) i1 = i;
  }
  bool applicable = upper_sum > static_cast<long long>(n) + b.k() - 2;
  for (int i = 0; i < b.k() && applicable; ++i)
    if (i != i1 && b.upper()[i] <= b.lower()[i]) applicable = false;
  result.improved_bound_applies = applicable;
  if (!applicable)
    result.warnings.push_back(
        "slack conditions unmet: the diameter-style length bound is not "
        "guaranteed");

  Clustering src = from;
  Clustering dst = to;
  std::vector<Move> pre_src =
      preprocess_tight_clusters(src, b, result.warnings, "source");
  std::vector<Move> pre_dst =
      preprocess_tight_clusters(dst, b, result.warnings, "target");

  for (const Move& m : pre_src) result.plan.moves.push_back(m);
  CoreBuilder builder(src, dst, options, b, result.plan.moves);
  builder.run();
  for (auto it = pre_dst.rbegin(); it != pre_dst.rend(); ++it)
    result.plan.moves.push_back(it->reversed());

  // Replay with bounds enforced: a violation here is a planner bug and
  // surfaces as BoundViolationError rather than a silently bad plan.
  std::vector<Clustering> trace = apply_plan(from, result.plan, true);
  if (!(trace.back() == to))
    throw Error("plan_bounded: replay mismatch (bug)");
  return result;
}

DiameterReport diameter_bounds(const SizeBounds& b, int n) {
  long long lower_sum = 0, upper_sum = 0;
  for (int i = 0; i < b.k(); ++i) {
    lower_sum += b.lower()[i];
    upper_sum += b.upper()[i];
  }
  if (n < lower_sum || n > upper_sum)
    throw EmptyPolytopeError("no clustering of " + std::to_string(n) +
                             " items satisfies the bounds");
  DiameterReport report;
  int k = b.k();
  if (k == 1) return report;  // a single cluster admits a single clustering

  std::vector<int> by_upper(k);
  for (int i = 0; i < k; ++i) by_upper[i] = i;
  std::stable_sort(by_upper.begin(), by_upper.end(),
                   [&](int a, int c) { return b.upper()[a] > b.upper()[c]; });

  auto slack = [&](int i) { return b.upper()[i] - b.lower()[i]; };
  int i1 = 0, i2 = -1;
  for (int i = 1; i < k; ++i)
    if (slack(i) < slack(i1)) i1 = i;
  for (int i = 0; i < k; ++i)
    if (i != i1 && (i2 < 0 || slack(i) < slack(i2))) i2 = i;
  report.i1 = i1;

  long long remaining = 0;
  for (int i = 0; i < k; ++i)
    if (i != i1 && i != i2) remaining += slack(i);
  report.base_bound.twice =
      2LL * (b.upper()[by_upper[0]] + b.upper()[by_upper[1]]) + remaining;

  bool applicable = upper_sum > static_cast<long long>(n) + k - 2;
  for (int i = 0; i < k && applicable; ++i)
    if (i != i1 && slack(i) <= 0) applicable = false;
  report.improved_applicable = applicable;
  if (applicable) {
    long long off_i1 = 0;
    for (int i = 0; i < k; ++i)
      if (i != i1) off_i1 += slack(i);
    HalfUnits bound;
    bound.twice = 2LL * b.upper()[by_upper[0]] +
                  std::max(2LL * b.upper()[by_upper[1]], off_i1) +
                  4LL * (k - 2);
    report.improved_bound = bound;
  }
  return report;
}

}  // namespace clusterwalk
