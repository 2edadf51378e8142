#ifndef CLUSTERWALK_DOUBLEMOVES_HPP
#define CLUSTERWALK_DOUBLEMOVES_HPP

#include <optional>
#include <vector>

#include "clusterwalk/model.hpp"

namespace clusterwalk {

/// A long sequential move re-expressed as a short path plus a cycle.
///
/// For a path w_1...w_t (t >= 4) the interior becomes the cycle
/// P_Y = w_2...w_{t-1}w_2 whose closing artificial edge e_P = (w_{t-1}, w_2)
/// exists only as bookkeeping. Which item e_P carries, and which vertex is
/// the short path's interior, depend on which half is applied first:
///
///   - short path first: P' = w_1 w_{t-1} w_t, e_P then carries x_2;
///   - cycle first:      e_P carries x_t, P' becomes w_1 w_2 w_t.
///
/// Replaying either order changes cluster contents exactly as the original
/// path would.
class PathSplit {
 public:
  enum class State { Unapplied, CycleAppliedFirst, PathAppliedFirst };

  /// Throws PathTooShortError unless the path covers at least 4 vertices.
  explicit PathSplit(std::vector<Transfer> path);

  const std::vector<Transfer>& original() const { return original_; }
  State state() const { return state_; }

  int start() const { return original_.front().from; }        // w_1
  int end() const { return original_.back().to; }             // w_t
  int interior() const;                                       // w_{t-1} or w_2
  const std::string& first_item() const;                      // x_2
  const std::string& last_item() const;                       // x_t

  /// The current two-arc short path P'.
  std::vector<Transfer> short_path() const;
  /// The cycle P_Y including e_P with its current label.
  std::vector<Transfer> cycle() const;
  /// The artificial edge with its current label (x_t, or x_2 after the short
  /// path went first).
  Transfer artificial_edge() const;

  /// Records that e_P was consumed by some move before P' (interior flips to
  /// w_2).
  void mark_cycle_applied();
  /// Records that P' was applied while e_P is still pending (e_P's label
  /// flips to x_2).
  void mark_path_applied();

 private:
  std::vector<Transfer> original_;
  State state_ = State::Unapplied;
};

PathSplit split_path(const std::vector<Transfer>& path);

/// Which double-move a path integration dispatched to. case_id 1..4
/// mirrors the four anchor configurations; variant is 0 for the plain
/// double-moves and 'a'/'b'/'c' for the artificial-edge ones; fallback marks
/// the disjoint / single-cycle shortcuts.
struct IntegrationCase {
  int case_id = 0;
  char variant = 0;
  bool fallback = false;
  int wi1 = -1;  // first path vertex covered by the cycles
  int wi2 = -1;  // second-to-last covered
  int wi3 = -1;  // last covered
};

/// Selection context for bounded-size integrations: Case-4 double-moves park
/// one item at a cycle vertex between the two moves, so that vertex must sit
/// strictly below its upper bound.
struct BoundedContext {
  const SizeBounds* bounds = nullptr;
  const std::vector<int>* sizes = nullptr;  // current cluster sizes
};

/// Disjoint cycles into one or two cyclical moves (one when s = 1, the
/// two-move product-of-cyclic-permutations pattern when s >= 2).
/// Throws NotDisjointError when the cycles share vertices.
std::vector<Move> integrate_disjoint_cycles(
    const std::vector<std::vector<Transfer>>& cycles);

/// Pairwise disjoint paths and cycles into at most max{2, t} moves.
/// t = 0 defers to integrate_disjoint_cycles; one path yields a sequential
/// plus a cyclical move; two paths absorb every cycle into two sequential
/// moves; extra paths are applied individually.
std::vector<Move> integrate_disjoint_paths_and_cycles(
    const std::vector<std::vector<Transfer>>& paths,
    const std::vector<std::vector<Transfer>>& cycles);

struct PathIntegration {
  std::vector<Move> moves;
  IntegrationCase dispatch;
  /// Arcs of the path left unapplied (plus the re-rooted arc for the item
  /// sent across the shortcut). Empty whenever the path meets the cover at
  /// most three times.
  std::vector<Transfer> residual_arcs;
};

/// One path against a set of vertex-disjoint cycles, edge-disjoint from the
/// path: two moves that apply every cycle transfer, shrink the path's start
/// cluster, grow its end cluster, and cut every covered vertex's shared
/// degree (the four-case dispatch).
///
/// Bounded mode steers the Case-4 parking vertex to one with slack;
/// NoSlackVertexError when no cycle vertex qualifies.
PathIntegration integrate_path(const std::vector<Transfer>& path,
                               const std::vector<std::vector<Transfer>>& cover,
                               const std::optional<BoundedContext>& bounded);

/// Same, for a split path whose artificial edge e_P sits inside the cover.
/// Dispatches on the modified case variants; the artificial edge's intent is
/// realized even when the edge itself is never traversed. The split is fully
/// resolved afterwards.
PathIntegration integrate_artificial_path(
    const PathSplit& split, const std::vector<std::vector<Transfer>>& cover,
    const std::optional<BoundedContext>& bounded);

}  // namespace clusterwalk

#endif
