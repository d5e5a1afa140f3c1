#pragma once

#include <filesystem>
#include <vector>

#include "severi/graphs.hpp"

namespace severi {

// The complete duplicate-free list of templates of the given cogenus, in
// canonical (lexicographic) order.  delta = 0 yields the empty list.
// Results are memoized per process.
//
// Search window: a template of cogenus delta has length at most delta+1
// (each of the length-1 interior vertices must be straddled by an edge,
// an edge of length L straddles L-1 vertices, and L*r - 1 >= L - 1), so
// edge endpoints are drawn from [0, delta+1].
const std::vector<Template>& templates_of_cogenus(unsigned delta);

// All long-edge graphs with the given cogenus and maxv <= max_vertex,
// duplicate-free, in canonical order.
std::vector<TauGraph> graphs_of_cogenus_bounded(unsigned delta, unsigned max_vertex);

// Uncached variant with an explicit endpoint window; used by tests to
// verify the [0, delta+1] window is not binding.
std::vector<Template> enumerate_templates_in_window(unsigned delta, unsigned max_vertex);

// Advisory on-disk cache of template lists, one JSON file per cogenus.
// Entries are re-validated on load; any mismatch falls back to
// regeneration and rewrites the file.
class TemplateCache {
 public:
  explicit TemplateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::vector<Template> get(unsigned delta) const;

 private:
  std::filesystem::path file_for(unsigned delta) const;
  std::filesystem::path dir_;
};

}  // namespace severi
