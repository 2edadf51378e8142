#include "clusterwalk/generate.hpp"

namespace clusterwalk {

std::pair<Clustering, Clustering> random_clustering_pair(int n, int k,
                                                         std::uint64_t seed) {
  if (n <= 0 || k <= 0)
    throw ValidationError("random_clustering_pair: n and k must be positive");
  Rng rng(seed);
  std::vector<std::string> items;
  items.reserve(n);
  for (int i = 1; i <= n; ++i) items.push_back("x" + std::to_string(i));
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) a[i] = rng.next(k);
  for (int i = 0; i < n; ++i) b[i] = rng.next(k);
  return {Clustering(items, k, a), Clustering(items, k, b)};
}

}  // namespace clusterwalk
