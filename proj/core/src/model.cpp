#include "clusterwalk/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace clusterwalk {

Clustering::Clustering(std::vector<std::string> items, int k,
                       std::vector<int> assignment)
    : items_(std::move(items)), k_(k), assignment_(std::move(assignment)) {
  if (k_ <= 0) throw ValidationError("clustering: k must be positive");
  if (assignment_.size() != items_.size())
    throw ValidationError("clustering: assignment length " +
                          std::to_string(assignment_.size()) +
                          " does not match item count " +
                          std::to_string(items_.size()));
  index_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!index_.emplace(items_[i], static_cast<int>(i)).second)
      throw ValidationError("clustering: duplicate item '" + items_[i] + "'");
    if (assignment_[i] < 0 || assignment_[i] >= k_)
      throw ValidationError("clustering: item '" + items_[i] +
                            "' assigned to cluster " +
                            std::to_string(assignment_[i]) +
                            " outside [0, " + std::to_string(k_) + ")");
  }
}

bool Clustering::contains(const std::string& item) const {
  return index_.find(item) != index_.end();
}

int Clustering::item_index(const std::string& item) const {
  auto it = index_.find(item);
  return it == index_.end() ? -1 : it->second;
}

int Clustering::cluster_of(const std::string& item) const {
  int i = item_index(item);
  if (i < 0) throw ValidationError("clustering: unknown item '" + item + "'");
  return assignment_[i];
}

std::vector<int> Clustering::cluster_sizes() const {
  std::vector<int> sizes(k_, 0);
  for (int a : assignment_) ++sizes[a];
  return sizes;
}

bool Clustering::same_instance(const Clustering& other) const {
  if (k_ != other.k_ || items_.size() != other.items_.size()) return false;
  for (const auto& item : items_)
    if (!other.contains(item)) return false;
  return true;
}

bool Clustering::same_partition(const Clustering& other) const {
  if (!same_instance(other)) return false;
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (other.cluster_of(items_[i]) != assignment_[i]) return false;
  return true;
}

SizeBounds::SizeBounds(std::vector<int> lower, std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size())
    throw ValidationError("bounds: lower and upper lengths differ");
  if (lower_.empty()) throw ValidationError("bounds: empty");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i] < 0 || upper_[i] < 0)
      throw ValidationError("bounds: negative entry at cluster " +
                            std::to_string(i));
    if (lower_[i] > upper_[i])
      throw ValidationError("bounds: lower > upper at cluster " +
                            std::to_string(i));
  }
}

Move::Move(MoveKind kind, std::vector<Transfer> transfers)
    : kind_(kind), transfers_(std::move(transfers)) {
  if (transfers_.empty()) throw InvalidMoveError("move: no transfers");
  std::unordered_set<std::string> items;
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < transfers_.size(); ++i) {
    const Transfer& t = transfers_[i];
    if (t.from == t.to)
      throw InvalidMoveError("move: self-transfer of '" + t.item + "'");
    if (!items.insert(t.item).second)
      throw InvalidMoveError("move: item '" + t.item + "' moved twice");
    if (i > 0 && transfers_[i - 1].to != t.from)
      throw InvalidMoveError("move: chain broken at position " +
                             std::to_string(i));
    if (!seen.insert(t.from).second)
      throw InvalidMoveError("move: cluster " + std::to_string(t.from) +
                             " visited twice");
  }
  int last = transfers_.back().to;
  if (kind_ == MoveKind::Cyclical) {
    if (last != transfers_.front().from)
      throw InvalidMoveError("move: cyclical move does not close");
    if (transfers_.size() < 2)
      throw InvalidMoveError("move: cyclical move needs at least two transfers");
  } else {
    if (seen.count(last))
      throw InvalidMoveError("move: sequential move revisits cluster " +
                             std::to_string(last));
  }
}

std::vector<int> Move::clusters() const {
  std::vector<int> out;
  out.reserve(transfers_.size() + 1);
  out.push_back(transfers_.front().from);
  for (std::size_t i = 0; i + 1 < transfers_.size(); ++i)
    out.push_back(transfers_[i].to);
  if (kind_ == MoveKind::Sequential) out.push_back(transfers_.back().to);
  return out;
}

Move Move::reversed() const {
  std::vector<Transfer> rev;
  rev.reserve(transfers_.size());
  for (auto it = transfers_.rbegin(); it != transfers_.rend(); ++it)
    rev.push_back(Transfer{it->item, it->to, it->from});
  return Move(kind_, std::move(rev));
}

ValidationReport validate_clustering(const Clustering& c,
                                     const std::optional<SizeBounds>& bounds) {
  ValidationReport report;
  if (!bounds) return report;
  if (bounds->k() != c.k())
    throw ValidationError("bounds have k=" + std::to_string(bounds->k()) +
                          " but clustering has k=" + std::to_string(c.k()));
  std::vector<int> sizes = c.cluster_sizes();
  for (int i = 0; i < c.k(); ++i) {
    if (sizes[i] < bounds->lower()[i]) {
      report.violations.push_back({i, BoundViolation::Kind::Lower, sizes[i],
                                   bounds->lower()[i]});
    }
    if (sizes[i] > bounds->upper()[i]) {
      report.violations.push_back({i, BoundViolation::Kind::Upper, sizes[i],
                                   bounds->upper()[i]});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Clustering apply_move(const Clustering& c, const Move& m) {
  // Membership is read against the pre-move clustering: visited clusters are
  // distinct, so the transfers commute.
  std::vector<int> assignment = c.assignment();
  for (const Transfer& t : m.transfers()) {
    int idx = c.item_index(t.item);
    if (idx < 0 || c.assignment()[idx] != t.from)
      throw ItemNotInSourceError("item '" + t.item + "' is not in cluster " +
                                 std::to_string(t.from));
    if (t.to < 0 || t.to >= c.k())
      throw InvalidMoveError("transfer target cluster " +
                             std::to_string(t.to) + " out of range");
    assignment[idx] = t.to;
  }
  return Clustering(c.items(), c.k(), std::move(assignment));
}

std::vector<Clustering> apply_plan(const Clustering& c,
                                   const TransformationPlan& plan,
                                   bool enforce_bounds) {
  std::vector<Clustering> trace;
  trace.push_back(c);
  for (std::size_t i = 0; i < plan.moves.size(); ++i) {
    trace.push_back(apply_move(trace.back(), plan.moves[i]));
    if (enforce_bounds && plan.bounds) {
      ValidationReport report = validate_clustering(trace.back(), plan.bounds);
      if (!report.ok) {
        const BoundViolation& v = report.violations.front();
        throw BoundViolationError(
            i, v.cluster,
            "plan step " + std::to_string(i) + " pushes cluster " +
                std::to_string(v.cluster) + " to size " +
                std::to_string(v.size) + ", " +
                (v.kind == BoundViolation::Kind::Lower ? "below lower bound "
                                                       : "above upper bound ") +
                std::to_string(v.bound));
      }
    }
  }
  return trace;
}

}  // namespace clusterwalk
