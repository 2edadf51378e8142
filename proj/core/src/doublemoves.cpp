#include "clusterwalk/doublemoves.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "arc_util.hpp"

namespace clusterwalk {

namespace {

using detail::arc_entering;
using detail::arc_leaving;
using detail::canonical_cycle;
using detail::chain_vertices;
using detail::component_less;
using detail::is_simple_cycle;
using detail::is_simple_path;
using detail::traverse;

void require_simple_cycles(const std::vector<std::vector<Transfer>>& cycles) {
  for (const auto& c : cycles)
    if (!is_simple_cycle(c))
      throw InvalidMoveError("integration: component is not a simple cycle");
}

void require_vertex_disjoint(const std::vector<std::vector<Transfer>>& cycles) {
  std::set<int> seen;
  for (const auto& c : cycles)
    for (int v : chain_vertices(c, true))
      if (!seen.insert(v).second)
        throw NotDisjointError("integration: cycles share vertex " +
                               std::to_string(v));
}

Transfer smallest_arc(const std::vector<Transfer>& cycle) {
  return *std::min_element(cycle.begin(), cycle.end());
}

void append(std::vector<Transfer>& dst, const std::vector<Transfer>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Cycles in a fixed role order plus the chosen arc e_i = (u_i, v_i) of each.
struct Spine {
  std::vector<std::vector<Transfer>> cycles;
  std::vector<Transfer> chosen;

  int s() const { return static_cast<int>(cycles.size()); }
  int u(int i) const { return chosen[i].from; }
  int v(int i) const { return chosen[i].to; }
  const std::string& item(int i) const { return chosen[i].item; }
};

// Walk the cycles front to back: Y_1 - e_1 from v_1, then introduced edges
// (u_i, v_{i+1}) carrying e_i's item. Ends at u_s.
std::vector<Transfer> ascending_spine(const Spine& sp) {
  std::vector<Transfer> out;
  for (int i = 0; i < sp.s(); ++i) {
    if (i > 0) out.push_back(Transfer{sp.item(i - 1), sp.u(i - 1), sp.v(i)});
    append(out, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
  }
  return out;
}

// Walk back to front: Y_s - e_s from v_s, introduced edges (u_i, v_{i-1})
// carrying e_i's item. Ends at u_1.
std::vector<Transfer> descending_spine(const Spine& sp) {
  std::vector<Transfer> out;
  for (int i = sp.s() - 1; i >= 0; --i) {
    if (i < sp.s() - 1) out.push_back(Transfer{sp.item(i + 1), sp.u(i + 1), sp.v(i)});
    append(out, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
  }
  return out;
}

// (v_s, v_{s-1}, e_{s-1}) ... (v_2, v_1, e_1): sends each misplaced item of
// an ascending spine home.
std::vector<Transfer> corrections_down(const Spine& sp) {
  std::vector<Transfer> out;
  for (int i = sp.s() - 1; i >= 1; --i)
    out.push_back(Transfer{sp.item(i - 1), sp.v(i), sp.v(i - 1)});
  return out;
}

// (v_1, v_2, e_2) ... (v_{s-1}, v_s, e_s): same for a descending spine.
std::vector<Transfer> corrections_up(const Spine& sp) {
  std::vector<Transfer> out;
  for (int i = 0; i + 1 < sp.s(); ++i)
    out.push_back(Transfer{sp.item(i + 1), sp.v(i), sp.v(i + 1)});
  return out;
}

// ------------------------------------------------------------------
// Path-side bookkeeping for integrate_path / integrate_artificial_path.

struct PathView {
  std::vector<Transfer> arcs;
  std::vector<int> verts;
  std::vector<int> covered;  // covered positions, ascending
  int i1 = 0, i2 = 0, i3 = 0;

  int w(int pos) const { return verts[pos]; }
  // Real arcs for vertex positions [a, b].
  std::vector<Transfer> segment(int a, int b) const {
    return {arcs.begin() + a, arcs.begin() + b};
  }
  bool covered_between(int a, int b) const {
    for (int p : covered)
      if (p > a && p < b) return true;
    return false;
  }
};

PathView make_view(const std::vector<Transfer>& path,
                   const std::set<int>& cover_vertices) {
  PathView pv;
  pv.arcs = path;
  pv.verts = chain_vertices(path, false);
  for (std::size_t p = 0; p < pv.verts.size(); ++p)
    if (cover_vertices.count(pv.verts[p])) pv.covered.push_back(static_cast<int>(p));
  if (!pv.covered.empty()) {
    pv.i1 = pv.covered.front();
    pv.i3 = pv.covered.back();
    pv.i2 = pv.covered.size() >= 2 ? pv.covered[pv.covered.size() - 2] : pv.i1;
  }
  return pv;
}

// The w_{i1} -> w_{i2} stretch: real arcs when nothing covered sits strictly
// inside, otherwise one introduced edge carrying the item w_{i1} sends in P.
// The skipped arcs plus the re-rooted item form the residual.
std::vector<Transfer> mid1_arcs(const PathView& pv,
                                std::vector<Transfer>& residual) {
  if (pv.i1 == pv.i2) return {};
  if (!pv.covered_between(pv.i1, pv.i2)) return pv.segment(pv.i1, pv.i2);
  std::vector<Transfer> out{
      Transfer{pv.arcs[pv.i1].item, pv.w(pv.i1), pv.w(pv.i2)}};
  for (int a = pv.i1 + 1; a < pv.i2; ++a) residual.push_back(pv.arcs[a]);
  residual.push_back(
      Transfer{pv.arcs[pv.i1].item, pv.w(pv.i2), pv.w(pv.i1 + 1)});
  return out;
}

int find_cycle_of(const std::vector<std::vector<Transfer>>& cycles, int v) {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (detail::cycle_position(cycles[i], v) >= 0) return static_cast<int>(i);
  return -1;
}

// Orders the cover as first / middles (ascending) / last and picks the
// chosen arcs, anchoring e_first and e_last as the case demands.
Spine make_spine(const std::vector<std::vector<Transfer>>& cycles, int first,
                 int last, const Transfer& e_first, const Transfer& e_last,
                 int avoid_head) {
  Spine sp;
  sp.cycles.push_back(cycles[first]);
  sp.chosen.push_back(e_first);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (static_cast<int>(i) == first || static_cast<int>(i) == last) continue;
    // Case 2 requires v_i != w_{i2} for middle cycles; prefer the smallest
    // admissible arc.
    Transfer pick = *std::min_element(
        cycles[i].begin(), cycles[i].end(),
        [&](const Transfer& x, const Transfer& y) {
          bool xa = x.to != avoid_head, ya = y.to != avoid_head;
          if (xa != ya) return xa;
          return x < y;
        });
    if (avoid_head >= 0 && pick.to == avoid_head)
      throw CaseMismatchError("no admissible chosen arc avoids the anchor");
    sp.cycles.push_back(cycles[i]);
    sp.chosen.push_back(pick);
  }
  if (last != first) {
    sp.cycles.push_back(cycles[last]);
    sp.chosen.push_back(e_last);
  }
  return sp;
}

// Bounded Case-4 parking spot: lowest-index vertex of any cycle other than
// `exclude` whose cluster still has room (lowest index outright when
// unbounded).
int pick_slack_vertex(const std::vector<std::vector<Transfer>>& cycles,
                      int exclude, const std::optional<BoundedContext>& ctx) {
  int best = -1;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (static_cast<int>(i) == exclude) continue;
    for (int v : chain_vertices(cycles[i], true)) {
      if (ctx && (*ctx->sizes)[v] >= ctx->bounds->upper()[v]) continue;
      if (best < 0 || v < best) best = v;
    }
  }
  if (best < 0)
    throw NoSlackVertexError(
        "bounded Case 4: every candidate cluster is at its upper bound");
  return best;
}

}  // namespace

// ------------------------------------------------------------------
// PathSplit

PathSplit::PathSplit(std::vector<Transfer> path) : original_(std::move(path)) {
  if (!is_simple_path(original_))
    throw InvalidMoveError("split: not a simple path");
  if (original_.size() < 3)
    throw PathTooShortError("split: need at least 4 path vertices");
}

int PathSplit::interior() const {
  return state_ == State::CycleAppliedFirst ? original_.front().to
                                            : original_.back().from;
}

const std::string& PathSplit::first_item() const {
  return original_.front().item;
}

const std::string& PathSplit::last_item() const {
  return original_.back().item;
}

std::vector<Transfer> PathSplit::short_path() const {
  int w1 = original_.front().from;
  int wt = original_.back().to;
  int mid = interior();
  return {Transfer{first_item(), w1, mid}, Transfer{last_item(), mid, wt}};
}

std::vector<Transfer> PathSplit::cycle() const {
  std::vector<Transfer> out(original_.begin() + 1, original_.end() - 1);
  out.push_back(artificial_edge());
  return out;
}

Transfer PathSplit::artificial_edge() const {
  const std::string& label =
      state_ == State::PathAppliedFirst ? first_item() : last_item();
  return Transfer{label, original_.back().from, original_.front().to};
}

void PathSplit::mark_cycle_applied() {
  if (state_ != State::Unapplied)
    throw Error("split: artificial edge consumed twice");
  state_ = State::CycleAppliedFirst;
}

void PathSplit::mark_path_applied() {
  if (state_ != State::Unapplied)
    throw Error("split: short path applied after resolution");
  state_ = State::PathAppliedFirst;
}

PathSplit split_path(const std::vector<Transfer>& path) {
  return PathSplit(path);
}

// ------------------------------------------------------------------
// Disjoint integrations

std::vector<Move> integrate_disjoint_cycles(
    const std::vector<std::vector<Transfer>>& raw) {
  require_simple_cycles(raw);
  require_vertex_disjoint(raw);
  std::vector<std::vector<Transfer>> cycles;
  cycles.reserve(raw.size());
  for (const auto& c : raw) cycles.push_back(canonical_cycle(c));
  std::sort(cycles.begin(), cycles.end(), component_less);
  if (cycles.empty()) return {};
  if (cycles.size() == 1) return {Move(MoveKind::Cyclical, cycles[0])};

  Spine sp;
  for (auto& c : cycles) {
    sp.chosen.push_back(smallest_arc(c));
    sp.cycles.push_back(std::move(c));
  }
  int s = sp.s();
  // First move: every cycle minus its chosen arc, stitched by introduced
  // edges (u_i, v_{i+1 mod s}) that park each chosen item one cycle over.
  std::vector<Transfer> first;
  for (int i = 0; i < s; ++i) {
    append(first, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
    first.push_back(Transfer{sp.item(i), sp.u(i), sp.v((i + 1) % s)});
  }
  // Second move: the parked items walk home, v_1 -> v_0 -> v_{s-1} -> ... .
  std::vector<Transfer> second{Transfer{sp.item(0), sp.v(1), sp.v(0)}};
  for (int j = s - 1; j >= 1; --j)
    second.push_back(Transfer{sp.item(j), sp.v((j + 1) % s), sp.v(j)});
  return {Move(MoveKind::Cyclical, first), Move(MoveKind::Cyclical, second)};
}

std::vector<Move> integrate_disjoint_paths_and_cycles(
    const std::vector<std::vector<Transfer>>& raw_paths,
    const std::vector<std::vector<Transfer>>& raw_cycles) {
  if (raw_paths.empty()) return integrate_disjoint_cycles(raw_cycles);
  for (const auto& p : raw_paths)
    if (!is_simple_path(p))
      throw InvalidMoveError("integration: component is not a simple path");
  require_simple_cycles(raw_cycles);
  std::vector<std::vector<Transfer>> all = raw_cycles;
  for (auto& c : all) c = canonical_cycle(c);
  {
    std::vector<std::vector<Transfer>> everything = all;
    everything.insert(everything.end(), raw_paths.begin(), raw_paths.end());
    std::set<int> seen;
    for (std::size_t i = 0; i < everything.size(); ++i)
      for (int v : chain_vertices(everything[i], i < all.size()))
        if (!seen.insert(v).second)
          throw NotDisjointError("integration: components share vertex " +
                                 std::to_string(v));
  }
  std::vector<std::vector<Transfer>> paths = raw_paths;
  std::sort(paths.begin(), paths.end(), component_less);
  std::sort(all.begin(), all.end(), component_less);

  std::vector<Move> moves;
  if (all.empty()) {
    for (const auto& p : paths) moves.emplace_back(MoveKind::Sequential, p);
    return moves;
  }

  Spine sp;
  for (auto& c : all) {
    sp.chosen.push_back(smallest_arc(c));
    sp.cycles.push_back(std::move(c));
  }
  int s = sp.s();
  const std::vector<Transfer>& p1 = paths[0];
  const std::string& x_w = p1.front().item;
  int tail1 = p1.front().from;
  int w = p1.front().to;

  // Shared stem: enter the first cycle with the item p1 owes its neighbor,
  // then run the full ascending spine.
  std::vector<Transfer> first{Transfer{x_w, tail1, sp.v(0)}};
  for (int i = 0; i < s; ++i) {
    append(first, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
    if (i + 1 < s) first.push_back(Transfer{sp.item(i), sp.u(i), sp.v(i + 1)});
  }

  if (paths.size() == 1) {
    // Sequential then cyclical: the stem hops from u_s onto p1's own tail.
    first.push_back(Transfer{sp.item(s - 1), sp.u(s - 1), w});
    append(first, {p1.begin() + 1, p1.end()});
    std::vector<Transfer> second{Transfer{sp.item(s - 1), w, sp.v(s - 1)}};
    for (int j = s - 1; j >= 1; --j)
      second.push_back(Transfer{sp.item(j - 1), sp.v(j), sp.v(j - 1)});
    second.push_back(Transfer{x_w, sp.v(0), w});
    return {Move(MoveKind::Sequential, first),
            Move(MoveKind::Cyclical, second)};
  }

  // Two or more paths: the stem exits onto the second path's tail, and the
  // correction move finishes with the remainder of the first path.
  const std::vector<Transfer>& p2 = paths[1];
  int tail2 = p2.front().from;
  first.push_back(Transfer{sp.item(s - 1), sp.u(s - 1), tail2});
  append(first, p2);
  std::vector<Transfer> second{Transfer{sp.item(s - 1), tail2, sp.v(s - 1)}};
  for (int j = s - 1; j >= 1; --j)
    second.push_back(Transfer{sp.item(j - 1), sp.v(j), sp.v(j - 1)});
  second.push_back(Transfer{x_w, sp.v(0), w});
  append(second, {p1.begin() + 1, p1.end()});
  moves.emplace_back(MoveKind::Sequential, first);
  moves.emplace_back(MoveKind::Sequential, second);
  for (std::size_t i = 2; i < paths.size(); ++i)
    moves.emplace_back(MoveKind::Sequential, paths[i]);
  return moves;
}

// ------------------------------------------------------------------
// Anchored path integration

namespace {

PathIntegration integrate_cases(const PathView& pv,
                                const std::vector<std::vector<Transfer>>& cycles,
                                const std::optional<BoundedContext>& bounded) {
  PathIntegration out;
  int c1 = find_cycle_of(cycles, pv.w(pv.i1));
  int c2 = find_cycle_of(cycles, pv.w(pv.i2));
  int c3 = find_cycle_of(cycles, pv.w(pv.i3));
  out.dispatch.wi1 = pv.w(pv.i1);
  out.dispatch.wi2 = pv.w(pv.i2);
  out.dispatch.wi3 = pv.w(pv.i3);

  std::vector<Transfer> pre = pv.segment(0, pv.i1);
  std::vector<Transfer> mid2 = pv.segment(pv.i2, pv.i3);
  std::vector<Transfer> post = pv.segment(pv.i3, pv.verts.size() - 1);

  if (c1 != c3 && c2 == c3) {
    // Case 1: cyclical then sequential, entered at w_{i1} = u_1.
    out.dispatch.case_id = 1;
    Spine sp = make_spine(cycles, c1, c3, arc_leaving(cycles[c1], pv.w(pv.i1)),
                          arc_entering(cycles[c3], pv.w(pv.i2)), -1);
    std::vector<Transfer> a = mid1_arcs(pv, out.residual_arcs);
    append(a, descending_spine(sp));
    std::vector<Transfer> b = pre;
    b.push_back(sp.chosen[0]);
    append(b, corrections_up(sp));
    append(b, mid2);
    append(b, post);
    out.moves.emplace_back(MoveKind::Cyclical, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
  } else if (c1 != c3) {
    // Case 2: sequential then cyclical; middles must dodge w_{i2}.
    out.dispatch.case_id = 2;
    Spine sp = make_spine(cycles, c1, c3, arc_entering(cycles[c1], pv.w(pv.i1)),
                          arc_leaving(cycles[c3], pv.w(pv.i3)), pv.w(pv.i2));
    std::vector<Transfer> a = pre;
    append(a, ascending_spine(sp));
    append(a, post);
    std::vector<Transfer> b{sp.chosen.back()};
    append(b, corrections_down(sp));
    append(b, mid1_arcs(pv, out.residual_arcs));
    append(b, mid2);
    out.moves.emplace_back(MoveKind::Sequential, a);
    out.moves.emplace_back(MoveKind::Cyclical, b);
  } else if (c2 != c1) {
    // Case 3: cyclical then sequential, cycle closed through the path's
    // w_{i2} -> w_{i3} stretch.
    out.dispatch.case_id = 3;
    Spine sp = make_spine(cycles, c1, c2, arc_entering(cycles[c1], pv.w(pv.i3)),
                          arc_leaving(cycles[c2], pv.w(pv.i2)), -1);
    std::vector<Transfer> a = ascending_spine(sp);
    append(a, mid2);
    std::vector<Transfer> b = pre;
    append(b, mid1_arcs(pv, out.residual_arcs));
    b.push_back(sp.chosen.back());
    append(b, corrections_down(sp));
    append(b, post);
    out.moves.emplace_back(MoveKind::Cyclical, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
  } else {
    // Case 4: two sequential moves; the first parks an item at u_s.
    out.dispatch.case_id = 4;
    int u_s = pick_slack_vertex(cycles, c1, bounded);
    int last = find_cycle_of(cycles, u_s);
    Spine sp = make_spine(cycles, c1, last, arc_entering(cycles[c1], pv.w(pv.i1)),
                          arc_leaving(cycles[last], u_s), -1);
    std::vector<Transfer> a = pre;
    append(a, ascending_spine(sp));
    std::vector<Transfer> b{sp.chosen.back()};
    append(b, corrections_down(sp));
    append(b, mid1_arcs(pv, out.residual_arcs));
    append(b, mid2);
    append(b, post);
    out.moves.emplace_back(MoveKind::Sequential, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
  }
  return out;
}

}  // namespace

PathIntegration integrate_path(const std::vector<Transfer>& path,
                               const std::vector<std::vector<Transfer>>& raw,
                               const std::optional<BoundedContext>& bounded) {
  if (!is_simple_path(path))
    throw InvalidMoveError("integrate_path: not a simple path");
  require_simple_cycles(raw);
  require_vertex_disjoint(raw);
  std::vector<std::vector<Transfer>> cycles;
  for (const auto& c : raw) cycles.push_back(canonical_cycle(c));
  std::sort(cycles.begin(), cycles.end(), component_less);
  std::set<int> cover_vertices;
  std::set<Transfer> cover_arcs;
  for (const auto& c : cycles)
    for (const Transfer& arc : c) {
      cover_vertices.insert(arc.from);
      cover_arcs.insert(arc);
    }
  for (const Transfer& arc : path)
    if (cover_arcs.count(arc))
      throw NotEdgeDisjointError("integrate_path: path shares an arc with the cover");

  PathView pv = make_view(path, cover_vertices);
  if (pv.covered.empty()) {
    PathIntegration out;
    out.dispatch.fallback = true;
    out.moves = integrate_disjoint_paths_and_cycles({path}, cycles);
    return out;
  }
  if (cycles.size() == 1) {
    // Single-cycle cover: apply the two circuits individually.
    PathIntegration out;
    out.dispatch.fallback = true;
    out.dispatch.case_id = 4;
    out.moves.emplace_back(MoveKind::Sequential, path);
    out.moves.emplace_back(MoveKind::Cyclical, cycles[0]);
    return out;
  }
  return integrate_cases(pv, cycles, bounded);
}

PathIntegration integrate_artificial_path(
    const PathSplit& split, const std::vector<std::vector<Transfer>>& raw,
    const std::optional<BoundedContext>& bounded) {
  if (split.state() != PathSplit::State::Unapplied)
    throw CaseMismatchError(
        "integrate_artificial_path: split already resolved");
  require_simple_cycles(raw);
  require_vertex_disjoint(raw);
  std::vector<std::vector<Transfer>> cycles;
  for (const auto& c : raw) cycles.push_back(canonical_cycle(c));
  std::sort(cycles.begin(), cycles.end(), component_less);

  const Transfer e_p = split.artificial_edge();
  int w1 = split.start();
  int wt = split.end();
  int wprev = split.original().back().from;  // w_{t-1}
  int w2 = split.original().front().to;      // w_2
  const std::string& x2 = split.first_item();
  const std::string& xt = split.last_item();

  int cp = -1;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (std::find(cycles[i].begin(), cycles[i].end(), e_p) != cycles[i].end())
      cp = static_cast<int>(i);
  if (cp < 0)
    throw CaseMismatchError(
        "integrate_artificial_path: cover does not contain the artificial edge");

  int cw1 = find_cycle_of(cycles, w1);
  int cwt = find_cycle_of(cycles, wt);
  int s = static_cast<int>(cycles.size());

  PathIntegration out;
  out.dispatch.wi1 = w1;
  out.dispatch.wi2 = wprev;
  out.dispatch.wi3 = wt;

  // Single cycle: play the cycle (artificial edge included), then the short
  // path with its interior flipped onto w_2. No parking spot needed.
  if (s == 1) {
    out.dispatch.case_id = 4;
    out.dispatch.variant = cw1 == cp ? 'a' : 'b';
    out.dispatch.fallback = true;
    out.moves.emplace_back(MoveKind::Cyclical, cycles[cp]);
    out.moves.emplace_back(
        MoveKind::Sequential,
        std::vector<Transfer>{Transfer{x2, w1, w2}, Transfer{xt, w2, wt}});
    return out;
  }

  if (cw1 >= 0 && cw1 != cp && cwt == cp) {
    // Modified Case 1: shortcut x_2 straight to w_2; x_t stays home until
    // the sequential move. e_P is skipped entirely.
    out.dispatch.case_id = 1;
    Spine sp = make_spine(cycles, cw1, cp, arc_leaving(cycles[cw1], w1),
                          arc_entering(cycles[cp], wprev), -1);
    std::vector<Transfer> a{Transfer{x2, w1, w2}};
    // cyc_P minus e_P minus e_s, entered at w_2.
    for (int i = sp.s() - 1; i >= 0; --i) {
      if (i == sp.s() - 1) {
        append(a, traverse(sp.cycles[i], w2, sp.u(i)));
      } else {
        a.push_back(Transfer{sp.item(i + 1), sp.u(i + 1), sp.v(i)});
        append(a, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
      }
    }
    std::vector<Transfer> b{sp.chosen[0]};
    append(b, corrections_up(sp));
    b.push_back(Transfer{xt, wprev, wt});
    out.moves.emplace_back(MoveKind::Cyclical, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
    return out;
  }

  if (cw1 >= 0 && cwt >= 0 && cw1 != cwt && cwt != cp) {
    // Modified Case 2a: the ordinary Case-2 double-move on the flipped short
    // path w_1 w_2 w_t; e_P rides along inside its cycle's traversal.
    out.dispatch.case_id = 2;
    out.dispatch.variant = 'a';
    std::vector<Transfer> flipped{Transfer{x2, w1, w2}, Transfer{xt, w2, wt}};
    std::set<int> cover_vertices;
    for (const auto& c : cycles)
      for (const Transfer& arc : c) cover_vertices.insert(arc.from);
    PathView pv = make_view(flipped, cover_vertices);
    PathIntegration inner = integrate_cases(pv, cycles, bounded);
    out.moves = std::move(inner.moves);
    out.residual_arcs = std::move(inner.residual_arcs);
    return out;
  }

  if (cw1 < 0 && cwt >= 0 && cwt != cp) {
    // Modified Case 2b: x_2 jumps straight to w_2 inside the first
    // sequential move; x_t goes straight home in the closing cyclical move.
    out.dispatch.case_id = 2;
    out.dispatch.variant = 'b';
    Spine sp = make_spine(cycles, cp, cwt, arc_entering(cycles[cp], wprev),
                          arc_leaving(cycles[cwt], wt), -1);
    std::vector<Transfer> a{Transfer{x2, w1, w2}};
    append(a, traverse(sp.cycles[0], w2, sp.u(0)));  // skips e_1 and e_P
    for (int i = 1; i < sp.s(); ++i) {
      a.push_back(Transfer{sp.item(i - 1), sp.u(i - 1), sp.v(i)});
      append(a, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
    }
    std::vector<Transfer> b{sp.chosen.back()};
    append(b, corrections_down(sp));
    b.push_back(Transfer{xt, wprev, wt});
    out.moves.emplace_back(MoveKind::Sequential, a);
    out.moves.emplace_back(MoveKind::Cyclical, b);
    return out;
  }

  if (cw1 >= 0 && cw1 != cp && (cwt < 0 || cwt == cw1)) {
    if (cwt < 0) {
      // Modified Case 2c: x_t leaves first (sequential), x_2 follows in the
      // cyclical correction. Treating e_P as cyc_P's withheld arc makes the
      // standard spine walk every real arc of cyc_P and park at w_{t-1}.
      out.dispatch.case_id = 2;
      out.dispatch.variant = 'c';
      Spine sp = make_spine(cycles, cw1, cp, arc_entering(cycles[cw1], w1),
                            Transfer{e_p.item, wprev, w2}, -1);
      std::vector<Transfer> a = ascending_spine(sp);
      a.push_back(Transfer{xt, wprev, wt});
      std::vector<Transfer> b = corrections_down(sp);
      b.push_back(Transfer{x2, w1, w2});
      out.moves.emplace_back(MoveKind::Sequential, a);
      out.moves.emplace_back(MoveKind::Cyclical, b);
      return out;
    }
    // Modified Case 3: w_1 and w_t share a cycle away from e_P's. The
    // cyclical move walks cyc_P only up to w_{t-1} (skipping e_P) and closes
    // with x_t sent straight home.
    out.dispatch.case_id = 3;
    Spine sp = make_spine(cycles, cw1, cp, arc_entering(cycles[cw1], wt),
                          arc_leaving(cycles[cp], w2), -1);
    std::vector<Transfer> a;
    for (int i = 0; i + 1 < sp.s(); ++i) {
      append(a, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
      a.push_back(Transfer{sp.item(i), sp.u(i), sp.v(i + 1)});
    }
    append(a, traverse(cycles[cp], sp.v(sp.s() - 1), wprev));
    a.push_back(Transfer{xt, wprev, wt});
    std::vector<Transfer> b{Transfer{x2, w1, w2}};
    b.push_back(sp.chosen.back());  // w_2 sends its own chosen arc's item
    append(b, corrections_down(sp));
    out.moves.emplace_back(MoveKind::Cyclical, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
    return out;
  }

  if (cw1 == cp) {
    // Modified Case 4a: flip the interior onto w_2 and run plain Case 4;
    // e_P is applied inside cyc_P's traversal before the short path's arcs.
    out.dispatch.case_id = 4;
    out.dispatch.variant = 'a';
    int u_s = pick_slack_vertex(cycles, cp, bounded);
    int last = find_cycle_of(cycles, u_s);
    Spine sp = make_spine(cycles, cp, last, arc_entering(cycles[cp], w1),
                          arc_leaving(cycles[last], u_s), -1);
    std::vector<Transfer> a = ascending_spine(sp);
    std::vector<Transfer> b{sp.chosen.back()};
    append(b, corrections_down(sp));
    b.push_back(Transfer{x2, w1, w2});
    b.push_back(Transfer{xt, w2, wt});
    out.moves.emplace_back(MoveKind::Sequential, a);
    out.moves.emplace_back(MoveKind::Sequential, b);
    return out;
  }

  // Modified Case 4b: w_1 uncovered; x_2 jumps to w_2 up front, x_t goes
  // home at the end of the second sequential move.
  out.dispatch.case_id = 4;
  out.dispatch.variant = 'b';
  int u_s = pick_slack_vertex(cycles, cp, bounded);
  int last = find_cycle_of(cycles, u_s);
  Spine sp = make_spine(cycles, cp, last, arc_entering(cycles[cp], wprev),
                        arc_leaving(cycles[last], u_s), -1);
  std::vector<Transfer> a{Transfer{x2, w1, w2}};
  append(a, traverse(sp.cycles[0], w2, sp.u(0)));  // skips e_1 and e_P
  for (int i = 1; i < sp.s(); ++i) {
    a.push_back(Transfer{sp.item(i - 1), sp.u(i - 1), sp.v(i)});
    append(a, traverse(sp.cycles[i], sp.v(i), sp.u(i)));
  }
  std::vector<Transfer> b{sp.chosen.back()};
  append(b, corrections_down(sp));
  b.push_back(Transfer{xt, wprev, wt});
  out.moves.emplace_back(MoveKind::Sequential, a);
  out.moves.emplace_back(MoveKind::Sequential, b);
  return out;
}

}  // namespace clusterwalk
