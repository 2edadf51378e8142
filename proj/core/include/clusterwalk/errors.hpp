#ifndef CLUSTERWALK_ERRORS_HPP
#define CLUSTERWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clusterwalk {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A move violates the chain/simplicity/kind rules.
class InvalidMoveError : public Error {
 public:
  using Error::Error;
};

/// A transfer names an item that does not sit in its `from` cluster.
class ItemNotInSourceError : public Error {
 public:
  using Error::Error;
};

/// Two clusterings do not describe the same instance (items or k differ).
class MismatchedInstancesError : public Error {
 public:
  using Error::Error;
};

/// A plan step left some cluster outside its size bounds.
class BoundViolationError : public Error {
 public:
  BoundViolationError(std::size_t step, int cluster, const std::string& what)
      : Error(what), step(step), cluster(cluster) {}
  std::size_t step;
  int cluster;
};

/// Instance exceeds the exhaustive-search guard (n <= 8, k <= 5).
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Bounded search space admits no walk between the endpoints.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

/// The cycle-cover flow model admits no cover of the required vertices.
class CoverInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Components passed to an integration routine share vertices.
class NotDisjointError : public Error {
 public:
  using Error::Error;
};

/// Path passed to integrate_path shares arcs with the cover.
class NotEdgeDisjointError : public Error {
 public:
  using Error::Error;
};

/// split_path needs at least four vertices.
class PathTooShortError : public Error {
 public:
  using Error::Error;
};

/// Cover anchors are inconsistent with the requested integration case.
class CaseMismatchError : public Error {
 public:
  using Error::Error;
};

/// Bounded Case-4 integration found no cycle vertex below its upper bound.
class NoSlackVertexError : public Error {
 public:
  using Error::Error;
};

/// An endpoint clustering violates the given size bounds.
class InfeasibleEndpointsError : public Error {
 public:
  using Error::Error;
};

/// The planner's step callback requested cancellation.
class PlanCancelledError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (files, raw vectors).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterwalk

#endif
