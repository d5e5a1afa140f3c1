#include "severi/json_io.hpp"

namespace severi {

nlohmann::ordered_json tau_graph_to_json(const TauGraph& g) {
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.types().size(); ++i) {
    const EdgeType& t = g.types()[i];
    edges.push_back({{"start", t.start},
                     {"end", t.end},
                     {"weight", t.weight},
                     {"count", g.counts()[i]}});
  }
  return edges;
}

TauGraph tau_graph_from_json(const nlohmann::json& edges, GraphMode mode) {
  std::vector<EdgeType> types;
  std::vector<unsigned> counts;
  for (const auto& record : edges) {
    types.push_back({record.at("start").get<unsigned>(),
                     record.at("end").get<unsigned>(),
                     record.at("weight").get<unsigned>()});
    counts.push_back(record.at("count").get<unsigned>());
  }
  return TauGraph(std::move(types), std::move(counts), mode);
}

}  // namespace severi
