#ifndef CLUSTERWALK_IO_HPP
#define CLUSTERWALK_IO_HPP

#include <string>
#include <vector>

#include "clusterwalk/cdg.hpp"
#include "clusterwalk/decompose.hpp"
#include "clusterwalk/model.hpp"
#include "clusterwalk/planner.hpp"

namespace clusterwalk {

// JSON formats (all cluster indices 0-based, stable key order):
//   clustering  {"k": int, "items": [str...], "assignment": [int...]}
//   bounds      {"upper": [int...], "lower": [int...]}
//   plan        {"moves": [{"kind": "cyclical"|"sequential",
//                           "transfers": [{"item", "from", "to"}...]}...]}
//   cdg         {"k": int, "arcs": [{"item", "from", "to"}...]}
//   decomposition {"paths": [[arc...]...], "cycles": [[arc...]...]}
// Parse errors carry the originating file (or caller-supplied context) and
// the offending JSON location.

std::string write_clustering(const Clustering& c);
std::string write_bounds(const SizeBounds& b);
std::string write_plan(const std::vector<Move>& moves);
std::string write_cdg(const ClusteringDifferenceGraph& g);
std::string write_decomposition(const PathCycleDecomposition& d);
std::string write_bound_report(const BoundReport& r);
std::string write_diameter_report(const DiameterReport& r);

Clustering read_clustering(const std::string& text, const std::string& context);
SizeBounds read_bounds(const std::string& text, const std::string& context);
std::vector<Move> read_plan(const std::string& text, const std::string& context);
ClusteringDifferenceGraph read_cdg(const std::string& text,
                                   const std::string& context);

Clustering load_clustering(const std::string& path);
SizeBounds load_bounds(const std::string& path);
std::vector<Move> load_plan(const std::string& path);

void save_text(const std::string& path, const std::string& text);

}  // namespace clusterwalk

#endif
