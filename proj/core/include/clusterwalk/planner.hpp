#ifndef CLUSTERWALK_PLANNER_HPP
#define CLUSTERWALK_PLANNER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clusterwalk/cdg.hpp"
#include "clusterwalk/decompose.hpp"
#include "clusterwalk/model.hpp"

namespace clusterwalk {

/// Transformation-distance bounds read off the degree profile:
/// at least half the total size change, at most the top shared degree plus
/// the larger of the runner-up shared degree and that half-sum.
struct BoundReport {
  int lower = 0;           // (1/2) sum delta_i
  int naive_upper = 0;     // eta_{i1} + eta_{i2} + lower
  int improved_upper = 0;  // eta_{i1} + max{eta_{i2}, lower}
  int i1 = 0;
  int i2 = 0;
};

BoundReport bounds(const Clustering& from, const Clustering& to);

/// Exact half-integral quantity; the circuit-diameter formulas over
/// (kappa+, kappa-) can land on halves and are never silently rounded.
struct HalfUnits {
  long long twice = 0;

  double value() const { return static_cast<double>(twice) / 2.0; }
  bool integral() const { return twice % 2 == 0; }
  friend bool operator==(const HalfUnits& a, const HalfUnits& b) {
    return a.twice == b.twice;
  }
};

/// Circuit-diameter bounds for the polytope of bounded-size clusterings on
/// n items: an unconditional bound, and a sharper one available when the
/// upper bounds carry enough total slack.
struct DiameterReport {
  HalfUnits base_bound;                     // k+_(1) + k+_(2) + half remaining slack
  bool improved_applicable = false;         // sum k+ > n + k - 2 and slack off i1
  std::optional<HalfUnits> improved_bound;  // k+_(1) + max{...} + 2(k-2)
  int i1 = 0;                               // argmin (k+ - k-), lowest-index ties
};

/// Throws EmptyPolytopeError when no clustering fits (n outside
/// [sum kappa-, sum kappa+]).
DiameterReport diameter_bounds(const SizeBounds& b, int n);

class EmptyPolytopeError : public Error {
 public:
  using Error::Error;
};

struct PlannerOptions {
  DecomposeStrategy strategy = DecomposeStrategy::GreedyPathsFirst;
  /// Called after each emitted move; returning false cancels the run with
  /// PlanCancelledError. Planning is pure otherwise.
  std::function<bool(std::size_t step, const Move&)> on_step;
};

/// Constructive transformation plan between two clusterings of the same
/// instance. The plan replays exactly to `to` and its length never exceeds
/// bounds(from, to).improved_upper. Deterministic for fixed inputs.
TransformationPlan plan(const Clustering& from, const Clustering& to,
                        const PlannerOptions& options = {});

struct BoundedPlanResult {
  TransformationPlan plan;
  bool improved_bound_applies = false;
  std::vector<std::string> warnings;
};

/// Bounded-size variant: every intermediate clustering of the returned plan
/// satisfies `b` (verified internally before returning). Both endpoints are
/// pre-processed so all but at most one cluster sits strictly below its
/// upper bound; the target-side preparation is replayed reversed at the
/// plan's tail.
///
/// When the slack conditions fail, planning is still attempted and the
/// result carries warnings; the length guarantee is then off the table.
/// Throws InfeasibleEndpointsError when an endpoint violates `b`.
BoundedPlanResult plan_bounded(const Clustering& from, const Clustering& to,
                               const SizeBounds& b,
                               const PlannerOptions& options = {});

}  // namespace clusterwalk

#endif
