#ifndef CLUSTERWALK_GENERATE_HPP
#define CLUSTERWALK_GENERATE_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "clusterwalk/model.hpp"

namespace clusterwalk {

/// Deterministic RNG wrapper. Draws avoid std::uniform_int_distribution so
/// the same seed produces the same instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int next(int bound) {  // uniform-ish over [0, bound)
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
  }
  bool chance(int num, int den) { return next(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Random instance pair: items x1..xn, both sides assigned uniformly over k
/// clusters. Byte-reproducible for a fixed (n, k, seed).
std::pair<Clustering, Clustering> random_clustering_pair(int n, int k,
                                                         std::uint64_t seed);

}  // namespace clusterwalk

#endif
