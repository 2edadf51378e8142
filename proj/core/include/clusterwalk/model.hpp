#ifndef CLUSTERWALK_MODEL_HPP
#define CLUSTERWALK_MODEL_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusterwalk/errors.hpp"

namespace clusterwalk {

/// Assignment of n uniquely named items to k labeled clusters.
///
/// Clusters are 0-based indices everywhere in the API and in files;
/// human-readable output (DOT) renders them 1-based.
class Clustering {
 public:
  /// Validates on construction: unique items, assignment length n,
  /// every cluster index in [0, k). Throws ValidationError otherwise.
  Clustering(std::vector<std::string> items, int k, std::vector<int> assignment);

  int k() const { return k_; }
  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<std::string>& items() const { return items_; }
  const std::vector<int>& assignment() const { return assignment_; }

  bool contains(const std::string& item) const;
  int cluster_of(const std::string& item) const;  // throws ValidationError if unknown
  int item_index(const std::string& item) const;  // -1 if unknown

  std::vector<int> cluster_sizes() const;

  /// True when both sides have the same k and place every item identically.
  /// Item order is irrelevant; item sets must match.
  bool same_partition(const Clustering& other) const;

  /// Same item set and same k (the precondition shared by every two-clustering
  /// operation in the library).
  bool same_instance(const Clustering& other) const;

  friend bool operator==(const Clustering& a, const Clustering& b) {
    return a.same_partition(b);
  }

 private:
  std::vector<std::string> items_;
  int k_;
  std::vector<int> assignment_;
  std::unordered_map<std::string, int> index_;
};

/// Per-cluster size bounds kappa- <= |C_i| <= kappa+.
class SizeBounds {
 public:
  /// Throws ValidationError unless lower <= upper componentwise, equal
  /// lengths, and all entries non-negative.
  SizeBounds(std::vector<int> lower, std::vector<int> upper);

  int k() const { return static_cast<int>(lower_.size()); }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& upper() const { return upper_; }

  friend bool operator==(const SizeBounds& a, const SizeBounds& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  std::vector<int> lower_;
  std::vector<int> upper_;
};

/// One single-item transfer between two distinct clusters.
struct Transfer {
  std::string item;
  int from = 0;
  int to = 0;

  friend bool operator==(const Transfer& a, const Transfer& b) {
    return a.from == b.from && a.to == b.to && a.item == b.item;
  }
  /// Canonical (from, to, item) order used for stored arc multisets.
  friend bool operator<(const Transfer& a, const Transfer& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.item < b.item;
  }
};

enum class MoveKind { Cyclical, Sequential };

/// One circuit step: an ordered chain of transfers whose clusters form a
/// simple directed path (Sequential) or simple directed cycle (Cyclical).
///
/// Validated eagerly on construction and immutable afterwards. Within a move
/// the transfers are simultaneous on the polytope; because visited clusters
/// are pairwise distinct, execution order among them is immaterial.
class Move {
 public:
  /// Throws InvalidMoveError on an empty chain, a broken chain, repeated
  /// clusters, a repeated item, or a kind/shape mismatch.
  Move(MoveKind kind, std::vector<Transfer> transfers);

  MoveKind kind() const { return kind_; }
  const std::vector<Transfer>& transfers() const { return transfers_; }

  /// Clusters visited in chain order (first `from`, then each `to`).
  /// For a cyclical move the closing repeat is omitted.
  std::vector<int> clusters() const;

  /// The inverse move: each transfer flipped, order reversed.
  Move reversed() const;

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind_ == b.kind_ && a.transfers_ == b.transfers_;
  }

 private:
  MoveKind kind_;
  std::vector<Transfer> transfers_;
};

/// An explicit, replayable witness of one transformation.
struct TransformationPlan {
  Clustering source;
  Clustering target;
  std::vector<Move> moves;
  std::optional<SizeBounds> bounds;
};

struct BoundViolation {
  enum class Kind { Lower, Upper };
  int cluster = 0;
  Kind kind = Kind::Lower;
  int size = 0;
  int bound = 0;
};

/// Outcome of validate_clustering. Violations are data, not errors.
struct ValidationReport {
  bool ok = true;
  std::vector<BoundViolation> violations;
};

/// Checks the size-bound constraint rows for `c`. Structural invariants are
/// already guaranteed by construction. Throws ValidationError only when the
/// bounds' k differs from the clustering's.
ValidationReport validate_clustering(const Clustering& c,
                                     const std::optional<SizeBounds>& bounds);

/// Applies one move. Throws ItemNotInSourceError when a transfer's item is
/// not in its `from` cluster.
Clustering apply_move(const Clustering& c, const Move& m);

/// Replays a plan from `c`. The trace starts with `c` itself and gains one
/// entry per move; the final clustering is trace.back().
///
/// With enforce_bounds set and plan.bounds present, every intermediate
/// clustering is validated; the first offending step raises
/// BoundViolationError identifying the step and cluster.
std::vector<Clustering> apply_plan(const Clustering& c,
                                   const TransformationPlan& plan,
                                   bool enforce_bounds);

}  // namespace clusterwalk

#endif
