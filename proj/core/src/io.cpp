#include "clusterwalk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clusterwalk {

namespace {

using json = nlohmann::ordered_json;

json transfer_to_json(const Transfer& t) {
  return json{{"item", t.item}, {"from", t.from}, {"to", t.to}};
}

Transfer transfer_from_json(const json& j) {
  return Transfer{j.at("item").get<std::string>(), j.at("from").get<int>(),
                  j.at("to").get<int>()};
}

json arcs_to_json(const std::vector<Transfer>& arcs) {
  json out = json::array();
  for (const Transfer& a : arcs) out.push_back(transfer_to_json(a));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

template <typename F>
auto with_context(const std::string& context, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(context + ": " + e.what());
  }
}

json half_units_to_json(const HalfUnits& h) {
  if (h.integral()) return json(h.twice / 2);
  return json(static_cast<double>(h.twice) / 2.0);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string write_clustering(const Clustering& c) {
  json j{{"k", c.k()}, {"items", c.items()}, {"assignment", c.assignment()}};
  return dump(j);
}

std::string write_bounds(const SizeBounds& b) {
  json j{{"upper", b.upper()}, {"lower", b.lower()}};
  return dump(j);
}

std::string write_plan(const std::vector<Move>& moves) {
  json arr = json::array();
  for (const Move& m : moves) {
    arr.push_back(
        json{{"kind",
              m.kind() == MoveKind::Cyclical ? "cyclical" : "sequential"},
             {"transfers", arcs_to_json(m.transfers())}});
  }
  return dump(json{{"moves", arr}});
}

std::string write_cdg(const ClusteringDifferenceGraph& g) {
  return dump(json{{"k", g.k()}, {"arcs", arcs_to_json(g.arcs())}});
}

std::string write_decomposition(const PathCycleDecomposition& d) {
  json paths = json::array();
  for (const auto& p : d.paths) paths.push_back(arcs_to_json(p));
  json cycles = json::array();
  for (const auto& c : d.cycles) cycles.push_back(arcs_to_json(c));
  return dump(json{{"paths", paths}, {"cycles", cycles}});
}

std::string write_bound_report(const BoundReport& r) {
  return dump(json{{"lower", r.lower},
                   {"naive_upper", r.naive_upper},
                   {"improved_upper", r.improved_upper},
                   {"i1", r.i1},
                   {"i2", r.i2}});
}

std::string write_diameter_report(const DiameterReport& r) {
  json j{{"lemma5_bound", half_units_to_json(r.base_bound)},
         {"theorem4_applicable", r.improved_applicable},
         {"i1", r.i1}};
  if (r.improved_bound)
    j["theorem4_bound"] = half_units_to_json(*r.improved_bound);
  return dump(j);
}

Clustering read_clustering(const std::string& text,
                           const std::string& context) {
  json j = parse(text, context);
  return with_context(context, [&] {
    return Clustering(j.at("items").get<std::vector<std::string>>(),
                      j.at("k").get<int>(),
                      j.at("assignment").get<std::vector<int>>());
  });
}

SizeBounds read_bounds(const std::string& text, const std::string& context) {
  json j = parse(text, context);
  return with_context(context, [&] {
    return SizeBounds(j.at("lower").get<std::vector<int>>(),
                      j.at("upper").get<std::vector<int>>());
  });
}

std::vector<Move> read_plan(const std::string& text,
                            const std::string& context) {
  json j = parse(text, context);
  return with_context(context, [&] {
    std::vector<Move> moves;
    for (const json& mj : j.at("moves")) {
      std::string kind = mj.at("kind").get<std::string>();
      if (kind != "cyclical" && kind != "sequential")
        throw ValidationError(context + ": unknown move kind '" + kind + "'");
      std::vector<Transfer> transfers;
      for (const json& tj : mj.at("transfers"))
        transfers.push_back(transfer_from_json(tj));
      moves.emplace_back(
          kind == "cyclical" ? MoveKind::Cyclical : MoveKind::Sequential,
          std::move(transfers));
    }
    return moves;
  });
}

ClusteringDifferenceGraph read_cdg(const std::string& text,
                                   const std::string& context) {
  json j = parse(text, context);
  return with_context(context, [&] {
    std::vector<Transfer> arcs;
    for (const json& aj : j.at("arcs")) arcs.push_back(transfer_from_json(aj));
    return ClusteringDifferenceGraph(j.at("k").get<int>(), std::move(arcs));
  });
}

Clustering load_clustering(const std::string& path) {
  return read_clustering(read_file(path), path);
}

SizeBounds load_bounds(const std::string& path) {
  return read_bounds(read_file(path), path);
}

std::vector<Move> load_plan(const std::string& path) {
  return read_plan(read_file(path), path);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path + ": cannot open for writing");
  out << text;
}

}  // namespace clusterwalk
