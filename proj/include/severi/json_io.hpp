#pragma once

#include <nlohmann/json.hpp>

#include "severi/graphs.hpp"

namespace severi {

inline constexpr int kJsonFormatVersion = 1;

// Canonical record: list of {start, end, weight, count} objects.
nlohmann::ordered_json tau_graph_to_json(const TauGraph& g);
TauGraph tau_graph_from_json(const nlohmann::json& edges,
                             GraphMode mode = GraphMode::LongEdge);

}  // namespace severi
