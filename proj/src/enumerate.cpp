#include "severi/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "severi/json_io.hpp"

namespace severi {

namespace {

// Candidate edge types with endpoints in [0, max_vertex], per-copy cogenus
// in [1, delta], sorted canonically.
std::vector<EdgeType> candidate_types(unsigned delta, unsigned max_vertex) {
  std::vector<EdgeType> out;
  for (unsigned start = 0; start < max_vertex; ++start) {
    for (unsigned end = start + 1; end <= max_vertex; ++end) {
      const unsigned len = end - start;
      for (unsigned weight = 1; len * weight <= delta + 1; ++weight) {
        const EdgeType t{start, end, weight};
        if (t.cogenus() >= 1 && t.cogenus() <= delta) out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Emit>
void multisets_of_cogenus(const std::vector<EdgeType>& types, unsigned delta, Emit&& emit) {
  std::vector<EdgeType> chosen_types;
  std::vector<unsigned> chosen_counts;
  auto rec = [&](auto&& self, std::size_t from, unsigned remaining) -> void {
    if (remaining == 0) {
      if (!chosen_types.empty()) emit(chosen_types, chosen_counts);
      return;
    }
    for (std::size_t i = from; i < types.size(); ++i) {
      const unsigned c = types[i].cogenus();
      if (c > remaining) continue;
      for (unsigned count = 1; count * c <= remaining; ++count) {
        chosen_types.push_back(types[i]);
        chosen_counts.push_back(count);
        self(self, i + 1, remaining - count * c);
        chosen_types.pop_back();
        chosen_counts.pop_back();
      }
    }
  };
  rec(rec, 0, delta);
}

}  // namespace

std::vector<Template> enumerate_templates_in_window(unsigned delta, unsigned max_vertex) {
  std::vector<Template> result;
  if (delta == 0) return result;
  const auto types = candidate_types(delta, max_vertex);
  multisets_of_cogenus(types, delta, [&](const std::vector<EdgeType>& ts,
                                         const std::vector<unsigned>& counts) {
    TauGraph g(ts, counts);
    if (g.is_template()) result.emplace_back(std::move(g));
  });
  std::sort(result.begin(), result.end());
  return result;
}

const std::vector<Template>& templates_of_cogenus(unsigned delta) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Template>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(delta);
  if (it == memo.end()) {
    it = memo.emplace(delta, enumerate_templates_in_window(delta, delta + 1)).first;
  }
  return it->second;
}

std::vector<TauGraph> graphs_of_cogenus_bounded(unsigned delta, unsigned max_vertex) {
  std::vector<TauGraph> result;
  if (delta == 0) return result;
  const auto types = candidate_types(delta, max_vertex);
  multisets_of_cogenus(types, delta, [&](const std::vector<EdgeType>& ts,
                                         const std::vector<unsigned>& counts) {
    result.emplace_back(ts, counts);
  });
  std::sort(result.begin(), result.end());
  return result;
}

std::filesystem::path TemplateCache::file_for(unsigned delta) const {
  return dir_ / ("templates_delta_" + std::to_string(delta) + ".json");
}

std::vector<Template> TemplateCache::get(unsigned delta) const {
  const auto path = file_for(delta);
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      nlohmann::json doc = nlohmann::json::parse(in);
      if (doc.at("format_version").get<int>() == kJsonFormatVersion &&
          doc.at("delta").get<unsigned>() == delta) {
        std::vector<Template> loaded;
        for (const auto& record : doc.at("templates")) {
          loaded.emplace_back(tau_graph_from_json(record));
        }
        bool valid = std::is_sorted(loaded.begin(), loaded.end());
        for (const Template& t : loaded) {
          valid = valid && t.cogenus() == delta;
        }
        if (valid && loaded.size() == templates_of_cogenus(delta).size()) return loaded;
      }
    } catch (const std::exception&) {
      // fall through to regeneration
    }
  }
  const auto& fresh = templates_of_cogenus(delta);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (!ec) {
    nlohmann::ordered_json doc;
    doc["format_version"] = kJsonFormatVersion;
    doc["delta"] = delta;
    auto& list = doc["templates"] = nlohmann::ordered_json::array();
    for (const Template& t : fresh) list.push_back(tau_graph_to_json(t.graph()));
    std::ofstream out(file_for(delta));
    out << doc.dump(2) << "\n";
  }
  return fresh;
}

}  // namespace severi
